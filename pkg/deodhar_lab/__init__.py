"""
deodharLab: exact computations on Go-diagrams, Deodhar components of the
Grassmannian and the closure relations between them.
"""

__version__ = "1.0.0"
