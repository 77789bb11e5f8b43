"""Inicialización del paquete src."""

# Librería de medidas motívicas, estructuras de potencia e invariantes de curvas planas
__version__ = "0.1.0"
