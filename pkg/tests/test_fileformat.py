import pytest

from grouptables.core import cyclic, cyclic_group, quotient, symmetric_group
from grouptables.errors import DomainError
from grouptables.fileformat import (
    format_element,
    load_group,
    parse_element,
    parse_elements,
    parse_group,
    parse_map,
    print_group,
    print_map,
)
from grouptables.gmaps import map_from_function
from grouptables.products import direct_product


class TestElements:
    def test_atoms(self):
        assert format_element(7) == "7"
        assert parse_element("7") == 7
        assert parse_element("x") == "x"

    def test_tuples(self):
        assert format_element((0, 1)) == "(0 1)"
        assert parse_element("(0 1)") == (0, 1)

    def test_nested(self):
        x = ((0, 1), (2, (3, 4)))
        assert parse_element(format_element(x)) == x

    def test_multi(self):
        assert parse_elements("0 (1 2) 3") == [0, (1, 2), 3]

    def test_unbalanced(self):
        with pytest.raises(DomainError):
            parse_element("(0 1")
        with pytest.raises(DomainError):
            parse_element(")")


class TestGroupFiles:
    @pytest.mark.parametrize(
        "g",
        [
            cyclic_group(1),
            cyclic_group(6),
            symmetric_group(3),
            direct_product([cyclic_group(2), cyclic_group(3)]),
        ],
        ids=["z1", "z6", "s3", "z2xz3"],
    )
    def test_round_trip(self, g):
        assert load_group(print_group(g)) == g

    def test_round_trip_quotient_labels(self):
        z4 = cyclic_group(4)
        q = quotient(z4, cyclic(2, z4))
        assert load_group(print_group(q)) == q

    def test_bad_header(self):
        with pytest.raises(DomainError):
            parse_group("grp 2\n0 1\n0 1\n1 0\n")

    def test_wrong_line_count(self):
        with pytest.raises(DomainError):
            parse_group("group 2\n0 1\n0 1\n")


class TestMapFiles:
    def test_round_trip(self):
        z4 = cyclic_group(4)
        m = map_from_function(z4.roster, lambda x: (3 * x) % 4)
        assert parse_map(print_map(m)) == m

    def test_tuple_keys(self):
        g = direct_product([cyclic_group(2), cyclic_group(2)])
        m = map_from_function(g.roster, lambda x: (x[1], x[0]))
        assert parse_map(print_map(m)) == m

    def test_bad_line(self):
        with pytest.raises(DomainError):
            parse_map("0 = 1\n")
