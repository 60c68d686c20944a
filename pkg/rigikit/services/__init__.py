"""Service layer: one module per analysis concern."""
