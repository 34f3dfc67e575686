"""Reversible combinators with fractional types for ancilla management.

Three layers share one set of finite types:

* :mod:`fracpi.combinators` -- type isomorphisms as reversible circuits;
* :mod:`fracpi.frac` -- ``Eta``/``Eps`` allocate a value together with a
  GC process for it, deallocation checked at run time;
* :mod:`fracpi.pointed` -- pointed and singleton types that make that check
  a construction-time property, with :mod:`fracpi.extraction` turning
  pointed programs back into dynamic ones that never fail.
"""

from fracpi.combinators import (CNOT, NOT, TOFFOLI, controlled, evaluate,
                                infer, invert)
from fracpi.errors import (IllTyped, ParseError, PiError, PointMismatch,
                           TypeMismatch)
from fracpi.extraction import check_ext, ext_comb, ext_ty
from fracpi.frac import Eps, Eta, eval_d, id_via_ancilla, infer_d, revx
from fracpi.model import (BOOL, FALSE, GC, TRUE, enumerate_values, has_type,
                          size, val_eq)
from fracpi.pointed import focus_of, pt_dom_cod, pt_eval, pt_invert, revrev
from fracpi.syntax import parse, pretty, show

__all__ = [
    "CNOT", "NOT", "TOFFOLI", "controlled", "evaluate", "infer", "invert",
    "IllTyped", "ParseError", "PiError", "PointMismatch", "TypeMismatch",
    "check_ext", "ext_comb", "ext_ty", "Eps", "Eta", "eval_d",
    "id_via_ancilla", "infer_d", "revx", "BOOL", "FALSE", "GC", "TRUE",
    "enumerate_values", "has_type", "size", "val_eq", "focus_of",
    "pt_dom_cod", "pt_eval", "pt_invert", "revrev", "parse", "pretty", "show",
]
