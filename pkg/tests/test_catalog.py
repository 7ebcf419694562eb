import pytest

from colorcas.catalog import CATALOG_NAMES, build
from colorcas.catalog.entry import CatalogEntry, RootError, RootVector, extract_roots
from colorcas.catalog.osp import block_condition_data, osp_block_conditions
from colorcas.gmatrix import JForm, j_member

from conftest import entry
from reference_tables import osp_root

OSP_SIZES = [(1, 1), (2, 1), (3, 1), (2, 2)]


def test_catalog_names_and_errors():
    assert CATALOG_NAMES == ("qn", "z32-sl2", "osp")
    with pytest.raises(KeyError):
        build("nope")
    with pytest.raises(ValueError):
        build("qn", n=0)
    with pytest.raises(ValueError):
        build("osp", m=0, n=1)


def test_qn_basis_layout():
    alg = entry("qn", None, 2).algebra
    assert alg.names[:4] == ["E00(1,1)", "E00(1,2)", "E00(2,1)", "E00(2,2)"]
    assert alg.space.dim == 8


def test_z32_basis_and_degrees():
    alg = entry("z32-sl2").algebra
    assert alg.names == ["H00", "H11", "H22", "E+01", "E+12", "E+20", "E-02", "E-21", "E-10"]
    assert [alg.ctx.label(d) for d in alg.degrees] == ["00", "11", "22", "01", "12", "20", "02", "21", "10"]


@pytest.mark.parametrize("m,n", OSP_SIZES)
def test_osp_membership_rules(m, n):
    e = entry("osp", m, n)
    alg = e.algebra
    assert alg.dim == (m + 2 * n) ** 2 - m + 2 * n
    for X in alg.matrices:
        assert j_member(X, e.jform)
        assert all(osp_block_conditions(e, X).values())


def test_block_condition_form_is_not_a_membership_form():
    # diag(iB, iB, G, G) is color-symmetric and drives the block conditions, but the
    # rule J(Xu,v) + omega J(u,Xv) = 0 with it rejects the degree 11, 01 and 10 elements
    e = entry("osp", 1, 1)
    alg = e.algebra
    J, _ = block_condition_data(1, 1, alg.space)
    form = JForm(alg.space, J, "color-symmetric")
    rejected = {alg.ctx.label(alg.degrees[k]) for k, X in enumerate(alg.matrices) if not j_member(X, form)}
    assert rejected == {"11", "01", "10"}


@pytest.mark.parametrize("m,n", OSP_SIZES)
def test_osp_roots(m, n):
    e = entry("osp", m, n)
    alg = e.algebra
    roots, zero = extract_roots(e)
    l = m // 2
    assert len(zero) == l + n
    assert all(alg.ctx.label(d) == "11" for _, d in zero)
    assert {nm for nm, _ in zero} == {f"U({k}|{k})" for k in range(1, l + 1)} | {f"U(μ{k}|μ{k})" for k in range(1, n + 1)}
    labels = e.cartan_labels
    for nm, d, rv in roots:
        want = osp_root(nm)
        assert dict((lab, c) for lab, c in zip(labels, rv.coeffs) if c) == want, nm
    # each nonzero root space is two-dimensional with elements of different degrees
    spaces = {}
    for nm, d, rv in roots:
        spaces.setdefault(rv.coeffs, []).append(d)
    assert all(len(v) == 2 and v[0] != v[1] for v in spaces.values())


def test_root_vector_text():
    labs = ("a", "b")
    assert str(RootVector((1, -1), labs)) == "a - b"
    assert str(RootVector((0, -2), labs)) == "-2b"
    assert str(RootVector((0, 0), labs)) == "0"
    assert str(RootVector((-1, 2), labs)) == "-a + 2b"


def test_non_eigenvector_raises():
    e = entry("osp", 2, 1)
    alg = e.algebra
    bogus = CatalogEntry("x", {}, alg, {}, cartan=[alg.index["T(μ1,μ1')"]], cartan_labels=["h"])
    with pytest.raises(RootError):
        extract_roots(bogus)
