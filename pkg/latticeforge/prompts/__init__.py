"""Versioned meta-prompt templates (package data)."""
