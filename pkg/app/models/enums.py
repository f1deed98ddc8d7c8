import enum


class Tag(str, enum.Enum):
    zero = "zero"
    tangible = "tangible"
    ghost = "ghost"


class NuOrder(str, enum.Enum):
    lt = "Lt"
    match = "Match"
    gt = "Gt"


class Engine(str, enum.Enum):
    expand = "expand"     # permutation expansion, authoritative up to n = 8
    assign = "assign"     # optimal assignment + uniqueness probe


class OutputFormat(str, enum.Enum):
    text = "text"
    json = "json"


class StripKind(str, enum.Enum):
    interval = "Interval"
    point = "Point"
    empty = "Empty"


class Verdict(str, enum.Enum):
    passed = "pass"
    counterexample = "counterexample"
    proved = "proved"


class Quasilinearity(str, enum.Enum):
    strict = "strict"           # Q(v+w) = Q(v)+Q(w) on every sample
    quasilinear = "quasilinear"  # only Q(v+w) |= Q(v)+Q(w)
    neither = "neither"


class Orthogonality(str, enum.Enum):
    left = "left"
    right = "right"
    both = "both"


class SampleKind(str, enum.Enum):
    scalar = "scalar"
    tangible_scalar = "tangible-scalar"
    vector = "vector"
    matrix = "matrix"
    nonsingular_matrix = "nonsingular-matrix"
    symmetric_gram = "symmetric-gram"
    closed_base = "closed-base"
