"""Shared helpers: paths, configuration and report output"""
