"""Finite, effective constructions from Morita homotopy theory.

Subpackages: :mod:`moritakit.fincat` (categories), :mod:`moritakit.simpset`
(truncated simplicial sets), :mod:`moritakit.operad` (coloured symmetric
operads), :mod:`moritakit.theory` (the operad-to-theory functor),
:mod:`moritakit.bar` (bar constructions) and :mod:`moritakit.cli`.
"""

__version__ = "0.1.0"
