from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import group
from strongclosed import GroupFileError
from strongclosed.harness.groupfile import format_group, parse_group_file, parse_group_text, write_group_file
from strongclosed.harness.catalog import builtin_catalog


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_s3_file(tmp_path):
    path = write(tmp_path, "s3.txt", "degree: 3\ngen: (1 2 3)\ngen: (1 2)\n")
    e = parse_group_file(path)
    assert e.id == "s3" and e.order == 6
    assert e.group.order() == 6


def test_comments_and_blank_lines(tmp_path):
    text = "# the Klein group\n\ndegree: 4  # four points\ngen: (1 2)(3 4)\n   \ngen: (1 3)(2 4)\n"
    assert parse_group_file(write(tmp_path, "v4.grp", text)).order == 4


def test_no_generators_is_trivial(tmp_path):
    e = parse_group_file(write(tmp_path, "one.txt", "degree: 5\n"))
    assert e.order == 1 and e.group.degree == 5


def test_degree_inferred_when_missing():
    degree, gens = parse_group_text("gen: (1 2 3)\ngen: (4 5)\n")
    assert degree == 5 and all(g.degree == 5 for g in gens)


def test_unbalanced_cycle_reports_line():
    with pytest.raises(GroupFileError) as exc:
        parse_group_text("degree: 3\ngen: (1 2\n", "bad.txt")
    assert exc.value.line == 2
    assert "bad.txt:line 2" in str(exc.value)
    assert "unbalanced" in str(exc.value)


@pytest.mark.parametrize("text,line", [
    ("degree: 3\ndegree: 4\n", 2),
    ("degree: x\n", 1),
    ("degree: 0\n", 1),
    ("degree: 3\ngen: (1 4)\n", 2),
    ("degree: 3\norder: 6\n", 2),
    ("# ok\nnonsense\n", 2),
    ("degree: 3\ngen: (1 2) junk\n", 2),
])
def test_malformed_files(text, line):
    with pytest.raises(GroupFileError) as exc:
        parse_group_text(text)
    assert exc.value.line == line


@pytest.mark.parametrize("gid", ["S4", "Q8", "C5:C4", "C1", "D8xC3", "PSL2_7"])
def test_round_trip(tmp_path, gid):
    G = group(gid)
    path = str(tmp_path / f"{gid.replace(':', '_')}.txt")
    write_group_file(G, path, comment=f"{gid} from the catalog")
    H = parse_group_file(path).group
    assert H.degree == G.degree and H.order() == G.order()
    assert all(H.contains(g) for g in G.generators)
    assert all(G.contains(h) for h in H.generators)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([e.id for e in builtin_catalog() if e.order <= 64]))
def test_format_parse_identity(gid):
    G = group(gid)
    degree, gens = parse_group_text(format_group(G))
    assert degree == G.degree
    assert list(gens) == list(G.generators)
