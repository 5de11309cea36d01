"""The group list used by the code round-trip suites."""
from linprim import catalog as C
from linprim.search import enumerate_up_to


def full_catalog():
    """Every simple group of order <= 1e15, all sporadics, and large members of each family."""
    gs = set(enumerate_up_to(10 ** 15))
    gs |= set(C.all_sporadics())
    gs |= {C.Exc(f, q) for f, q in [("E8", 2), ("E7", 3), ("E6", 4), ("2E6", 2), ("F4", 2), ("2F4", 8),
                                     ("3D4", 3), ("SZ", 32), ("2G2", 243), ("G2", 5)]}
    gs |= {C.PSL_(7, 11), C.PSU_(9, 4), C.PSp(12, 9), C.Omega(11, 5), C.OmegaPlus(12, 3),
           C.OmegaMinus(10, 7), C.Alt(200), C.Cyclic(101)}
    return sorted(gs, key=lambda g: (C.order_value(g), C.render_code(g)))
