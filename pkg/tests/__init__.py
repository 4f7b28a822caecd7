"""Tests for the polyharm package."""
