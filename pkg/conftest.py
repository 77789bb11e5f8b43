"""Hace importable el paquete ``src`` desde la raíz del repositorio."""
