from .integers import (
    FactoredInteger,
    divides,
    euler_phi,
    factorize,
    is_prime,
    is_prime_power,
    legendre,
    primes_up_to,
)
from .cyclotomic import (
    CycloMatrix,
    CycloNumber,
    cyclo_add,
    cyclo_conj,
    cyclo_inv,
    cyclo_mul,
    cyclotomic_poly,
    kron,
    parse_cyclo,
)

__all__ = [
    "FactoredInteger", "divides", "euler_phi", "factorize", "is_prime", "is_prime_power",
    "legendre", "primes_up_to", "CycloMatrix", "CycloNumber", "cyclo_add", "cyclo_conj",
    "cyclo_inv", "cyclo_mul", "cyclotomic_poly", "kron", "parse_cyclo",
]
