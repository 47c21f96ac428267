"""3SAT encoders producing knowledge bases whose atom ``sat`` is unfounded
w.r.t. (∅, ∅) exactly when the CNF is unsatisfiable.

Per variable ``i`` the atoms ``v{i}_t``, ``v{i}_f`` and ``v{i}_u`` stand for
assigned-true, assigned-false and unassigned.
"""

from __future__ import annotations

from dataclasses import dataclass

from hmknf.kb import KnowledgeBase
from hmknf.ontology import ClausalOntology, Clause, Literal, sat


class DimacsError(ValueError):
    pass


@dataclass(frozen=True)
class CnfInstance:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.num_vars < 1:
            raise DimacsError("a CNF instance needs at least one variable")
        for clause in self.clauses:
            if not 1 <= len(clause) <= 3:
                raise DimacsError(f"clause {list(clause)} must have 1 to 3 literals")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise DimacsError(f"literal {lit} out of range 1..{self.num_vars}")


def parse_dimacs(text: str) -> CnfInstance:
    num_vars = num_clauses = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf" or num_vars is not None:
                raise DimacsError(f"line {lineno}: bad header {line!r}")
            try:
                num_vars, num_clauses = int(fields[2]), int(fields[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: bad header {line!r}") from None
            continue
        if num_vars is None:
            raise DimacsError(f"line {lineno}: clause before the 'p cnf' header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"line {lineno}: bad literal {tok!r}") from None
            if lit == 0:
                if not current:
                    raise DimacsError(f"line {lineno}: empty clause")
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if num_vars is None:
        raise DimacsError("missing 'p cnf' header")
    if current:
        raise DimacsError("last clause is not terminated by 0")
    if len(clauses) != num_clauses:
        raise DimacsError(f"header announces {num_clauses} clauses, found {len(clauses)}")
    return CnfInstance(num_vars, tuple(clauses))


def to_dimacs(c: CnfInstance) -> str:
    lines = [f"p cnf {c.num_vars} {len(c.clauses)}"]
    lines += [" ".join(map(str, clause)) + " 0" for clause in c.clauses]
    return "\n".join(lines) + "\n"


def is_satisfiable(c: CnfInstance) -> bool:
    """Satisfiability of the raw CNF, variable ``i`` mapped to atom ``i - 1``."""
    onto = ClausalOntology(
        tuple(
            Clause(frozenset(Literal(abs(l) - 1, l > 0) for l in clause))
            for clause in c.clauses
            if not any(-l in clause for l in clause)
        )
    )
    return sat(onto)


def _lit(l: int) -> str:
    return f"v{abs(l)}_t" if l > 0 else f"v{abs(l)}_f"


def encode_3sat_normal(c: CnfInstance) -> KnowledgeBase:
    n = range(1, c.num_vars + 1)
    rules = [(["sat"], ["sat"], [])]
    for i in n:
        rules.append(([f"v{i}_t"], [], [f"v{i}_f"]))
        rules.append(([f"v{i}_f"], [], [f"v{i}_t"]))
    clauses: list[list[str]] = []
    for i in n:
        u, f, t = f"v{i}_u", f"v{i}_f", f"v{i}_t"
        # exactly one of u, f, t
        clauses += [[u, f, t], [f"-{u}", f"-{f}"], [f"-{u}", f"-{t}"], [f"-{f}", f"-{t}"]]
    # total <-> no variable unassigned; total -> sat
    clauses += [["-total", f"-v{i}_u"] for i in n]
    clauses.append([f"v{i}_u" for i in n] + ["total"])
    clauses.append(["-total", "sat"])
    for clause in c.clauses:
        clauses.append(sorted({_lit(l) for l in clause}) + ["-total"])
    return KnowledgeBase.from_names(rules, clauses)


def encode_3sat_disjunctive(c: CnfInstance) -> KnowledgeBase:
    n = range(1, c.num_vars + 1)
    rules = [(["sat"], ["sat"], [])]
    rules += [([f"v{i}_t", f"v{i}_f"], [], []) for i in n]
    clauses: list[list[str]] = []
    for i in n:
        u, f, t = f"v{i}_u", f"v{i}_f", f"v{i}_t"
        # (f or t) xor u
        clauses += [[u, f, t], [f"-{f}", f"-{u}"], [f"-{t}", f"-{u}"]]
        clauses.append([f"-{f}", f"-{t}", "sat"])
    # (all clauses hold and nothing unassigned) -> sat, with c{j}_ok implied by clause j
    for j, clause in enumerate(c.clauses, 1):
        for lit in sorted({_lit(l) for l in clause}):
            clauses.append([f"-{lit}", f"c{j}_ok"])
    clauses.append([f"-c{j}_ok" for j in range(1, len(c.clauses) + 1)] + [f"v{i}_u" for i in n] + ["sat"])
    return KnowledgeBase.from_names(rules, clauses)
