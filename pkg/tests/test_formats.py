import pytest

from phylocompat import formats
from phylocompat.constructions import gen_Qst, gen_Rr, gen_theorem5_set
from phylocompat.formats import FormatError
from phylocompat.trees import Character, Quartet, Triplet


def test_parse_quartets_with_comments_and_blanks():
    text = "# header\n\n a  b|c d \nb1 b2 | a1 a2   # trailing\n"
    assert formats.parse_quartets(text) == [Quartet.of("a", "b", "c", "d"), Quartet.of("a1", "a2", "b1", "b2")]


def test_parse_triplets_and_characters():
    assert formats.parse_triplets("a b | c\n") == [Triplet.of("a", "b", "c")]
    assert formats.parse_characters("a,b|c,e|d|f\n") == [Character([["a", "b"], ["c", "e"], ["d"], ["f"]])]
    assert formats.parse_characters(" a , b | c\n") == [Character([["a", "b"], ["c"]])]


@pytest.mark.parametrize("line", ["a b c d", "a b | c", "a b | c d | e", "a a | c d", "a b | c d e"])
def test_bad_quartet_lines_report_line_number(line):
    with pytest.raises(FormatError) as err:
        formats.parse_quartets(f"# ok\n{line}\n", source="in.q")
    assert err.value.line == 2
    assert str(err.value).startswith("in.q:2:")


@pytest.mark.parametrize("line", ["a,b|", "a,,b|c", "a,b|b,c"])
def test_bad_character_lines(line):
    with pytest.raises(FormatError):
        formats.parse_characters(line)


@pytest.mark.parametrize("items", [gen_Qst(4, 3), gen_Rr(5), gen_theorem5_set(4)])
def test_round_trip(items):
    text = formats.dumps(items)
    parser = {Quartet: formats.parse_quartets, Triplet: formats.parse_triplets,
              Character: formats.parse_characters}[type(items[0])]
    assert parser(text) == list(items)


def test_dump_forms():
    assert formats.dumps([Quartet.of("b", "a", "d", "c")]) == "a b | c d\n"
    assert formats.dumps([Triplet.of("b", "a", "c")]) == "a b | c\n"


def test_read_errors(tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing here\n\n")
    with pytest.raises(FormatError, match="no characters"):
        formats.read(empty, "characters")
    with pytest.raises(FormatError, match="cannot read"):
        formats.read(tmp_path / "missing.txt", "quartets")
    with pytest.raises(Exception):
        formats.read(empty, "trees")
