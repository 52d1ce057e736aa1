import pytest

from catalan_ears.bijections import (
    binary_to_dissection,
    binary_to_ordered,
    ddu_distribution,
    ddu_formula,
    ddu_triangle,
    dissection_to_binary,
    dissection_to_dyck,
    dyck_to_dissection,
    dyck_to_ordered,
    ordered_to_binary,
    ordered_to_dyck,
)
from catalan_ears.enumeration import enumerate_dissections
from catalan_ears.exactmath import binomial, catalan, pow2
from catalan_ears.structures import (
    BinaryTree,
    Dissection,
    DyckPath,
    InvalidStructureError,
    OrderedTree,
    binary_size,
    black_ear_count,
    count_ddu,
    dyck_paths,
)

DECAGON_EXAMPLE = Dissection(8, ((-1, 4), (-1, 5), (-1, 7), (0, 3), (0, 4), (1, 3), (5, 7)))
LEAF = BinaryTree()


def all_binary_trees(n):
    if n == 0:
        yield None
        return
    for left_size in range(n):
        for left in all_binary_trees(left_size):
            for right in all_binary_trees(n - 1 - left_size):
                yield BinaryTree(left, right)


def test_dissection_to_binary_small():
    assert dissection_to_binary(Dissection(1, ())) == LEAF
    # Triangle (-1,0,2) on the base; the triangle (0,1,2) hangs off the
    # counterclockwise edge {0,2}, which is the right child.
    assert dissection_to_binary(Dissection(2, ((0, 2),))) == BinaryTree(None, LEAF)
    assert dissection_to_binary(Dissection(2, ((-1, 1),))) == BinaryTree(LEAF, None)


def test_binary_to_ordered_small():
    assert binary_to_ordered(None) == OrderedTree()
    assert binary_to_ordered(LEAF) == OrderedTree((OrderedTree(),))
    assert binary_to_ordered(BinaryTree(LEAF, LEAF)) == OrderedTree(
        (OrderedTree((OrderedTree(),)), OrderedTree())
    )


def test_ordered_to_dyck_small():
    assert ordered_to_dyck(OrderedTree()).steps == ""
    assert ordered_to_dyck(OrderedTree((OrderedTree(),))).steps == "UD"
    tree = OrderedTree((OrderedTree((OrderedTree(),)), OrderedTree()))
    assert ordered_to_dyck(tree).steps == "UUDDUD"
    assert dyck_to_ordered(DyckPath("UUDDUD")) == tree


def test_unique_small_images():
    assert dissection_to_dyck(Dissection(1, ())).steps == "UD"
    assert dyck_to_dissection(DyckPath("UD")) == Dissection(1, ())
    assert dissection_to_dyck(Dissection(2, ((0, 2),))).steps == "UDUD"
    assert dissection_to_dyck(Dissection(2, ((-1, 1),))).steps == "UUDD"


def test_decagon_worked_example():
    p = dissection_to_dyck(DECAGON_EXAMPLE)
    assert p.steps == "UUUUDDUDDDUDUUDD"
    assert count_ddu(p) == 2 == black_ear_count(DECAGON_EXAMPLE) - 1
    assert dyck_to_dissection(p) == DECAGON_EXAMPLE


def test_empty_path_has_no_dissection():
    with pytest.raises(InvalidStructureError):
        dyck_to_dissection(DyckPath(""))
    with pytest.raises(InvalidStructureError):
        binary_to_dissection(None)


@pytest.mark.parametrize("n", range(1, 9))
def test_stage_images_are_complete(n):
    binaries = set()
    ordered = set()
    for d in enumerate_dissections(n):
        b = dissection_to_binary(d)
        assert binary_size(b) == n
        assert binary_to_dissection(b) == d
        t = binary_to_ordered(b)
        assert t.edges == n
        assert ordered_to_binary(t) == b
        binaries.add(b)
        ordered.add(t)
    assert binaries == set(all_binary_trees(n))
    assert len(ordered) == catalan(n)


@pytest.mark.parametrize("n", range(0, 9))
def test_path_stage_round_trip(n):
    for p in dyck_paths(n):
        t = dyck_to_ordered(p)
        assert t.edges == n
        assert ordered_to_dyck(t) == p
        assert binary_to_ordered(ordered_to_binary(t)) == t


@pytest.mark.parametrize("n", range(1, 9))
def test_statistic_law(n):
    for d in enumerate_dissections(n):
        assert count_ddu(dissection_to_dyck(d)) == black_ear_count(d) - 1


def test_ddu_spot_value():
    assert ddu_distribution(3) == {0: 4, 1: 1}
    assert [ddu_formula(3, k) for k in range(2)] == [4, 1]


@pytest.mark.parametrize("n", range(1, 10))
def test_ddu_distribution_law(n):
    dist = ddu_distribution(n)
    for k in range(0, n):
        assert dist.get(k, 0) == ddu_formula(n, k)


def test_ddu_formula_edges():
    assert ddu_formula(0, 0) == 0
    assert ddu_formula(5, -1) == 0
    assert ddu_formula(5, 3) == 0


def test_ddu_triangle_layout():
    assert ddu_triangle(5) == [1, 2, 4, 1, 8, 6, 16, 24, 2]


def test_touchard_summand_is_v_entry(brute12):
    _, v = brute12
    for n in range(0, 12):
        for k in range(0, n // 2 + 1):
            assert v[n + 1, k + 1] == pow2(n - 2 * k) * binomial(n, 2 * k) * catalan(k)
