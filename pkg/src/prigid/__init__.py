"""Exact verification of rigidity criteria for fields and pro-p groups.

Finite coefficient computations only: finite fields, Laurent series, and
rational function fields on the field side; concrete finite p-group models
on the group side.  The command line entry point is `prigid`.
"""

__version__ = "1.0.0"
