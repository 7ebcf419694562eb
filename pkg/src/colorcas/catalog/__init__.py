"""Built-in example algebras with their representations and expected commutants."""
from .entry import CatalogEntry, RootVector, RootError, extract_roots
from .qn import build_qn
from .z32 import build_z32_sl2
from .osp import build_osp, osp_block_conditions

CATALOG_NAMES = ("qn", "z32-sl2", "osp")


def build(name: str, m=None, n=None) -> CatalogEntry:
    """Look up a catalog entry by name; ``n`` is the q(n) size, ``m``/``n`` the osp parameters."""
    if name == "qn":
        return build_qn(2 if n is None else n)
    if name == "z32-sl2":
        return build_z32_sl2()
    if name == "osp":
        return build_osp(1 if m is None else m, 1 if n is None else n)
    raise KeyError(f"unknown catalog entry {name!r}; choose from {', '.join(CATALOG_NAMES)}")


__all__ = [
    "CatalogEntry", "RootVector", "RootError", "extract_roots",
    "build_qn", "build_z32_sl2", "build_osp", "osp_block_conditions", "build", "CATALOG_NAMES",
]
