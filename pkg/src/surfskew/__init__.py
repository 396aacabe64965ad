"""Euler excess bounds, surface embeddings and exact oracles for skewness and crossing numbers."""
