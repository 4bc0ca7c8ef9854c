"""Shared models used across the partition meter."""
