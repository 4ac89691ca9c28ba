"""
Cross-cutting helpers: YAML configuration, union-find and thread pools.
"""
