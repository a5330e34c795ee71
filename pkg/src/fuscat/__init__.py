"""Modular data and level-rank duality checks for type B / C fusion categories."""
