"""First-order formulas over membership and equality, with counting and
truth-valued interpretations over finite carriers."""

from .axioms import AXIOMS, AxiomInstance, AxiomReport, check_axiom, choice_from_formula
from .semantics import Carrier, sigma_count, sigma_witnesses, tau_eval
from .syntax import (
    BOT,
    TOP,
    And,
    Bot,
    Const,
    Eq,
    Exists,
    Forall,
    Formula,
    FormulaSyntaxError,
    Iff,
    Imp,
    Mem,
    Not,
    Or,
    Pred,
    Top,
    Var,
    free_vars,
    parse_formula,
    substitute,
    to_text,
)

__all__ = [
    "AXIOMS",
    "BOT",
    "TOP",
    "And",
    "AxiomInstance",
    "AxiomReport",
    "Bot",
    "Carrier",
    "Const",
    "Eq",
    "Exists",
    "Forall",
    "Formula",
    "FormulaSyntaxError",
    "Iff",
    "Imp",
    "Mem",
    "Not",
    "Or",
    "Pred",
    "Top",
    "Var",
    "check_axiom",
    "choice_from_formula",
    "free_vars",
    "parse_formula",
    "sigma_count",
    "sigma_witnesses",
    "substitute",
    "tau_eval",
    "to_text",
]
