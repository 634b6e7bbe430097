"""
Tests for hybrid-swap
"""
