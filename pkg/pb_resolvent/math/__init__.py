from pb_resolvent.math.polynomial import (
    ExactRational,
    Polynomial,
    depress,
    is_palindromic,
    poly_arith,
    poly_divmod,
    poly_eval,
)
from pb_resolvent.math.radical import (
    Const,
    Product,
    Root,
    Sum,
    eval_radical,
    render,
    roots_of_unity,
)
from pb_resolvent.math.oracle import (
    OracleConfig,
    find_roots_numeric,
    multiset_match,
)
