"""Named reference systems used by the test suite and the CLI.

The STS(21) corpus covers: the four cyclic systems C1/C2/C3/C5 given by
base blocks, the order-72 system with 294 parallel classes (F72), the 16
parallel-class-free systems (FNOPC1-16: the first nine admit seven
3-cycles, the last seven admit three fixed points and six 3-cycles), the
five balance-marked systems (FBAL1-5: as printed, FBAL2 and FBAL5 are
genuinely 3-balanced while the other three admit an (8,7,6) colouring;
see the acceptance notes), the hexagon-free system (FHEXFREE),
the pasch-maximal order-108 system (F108), the crown-maximal system
(FCROWNMAX), the prism-free order-294 system (F294), the prism-maximal
order-54 system (F54), six twin pairs (FTWIN1A..FTWIN6B), the unique
one-mitre system (FMITRE1), four two-pasch systems whose switches are
isomorphic (F2P1-4) and one whose switches are not (F2PNONISO).

Small orders are available as constructive references: the Fano plane,
AG(2,3), the two STS(13)s, and PG(3,2).
"""

from __future__ import annotations

from functools import lru_cache

from .core import (CyclicSpec, TripleSystem, decode_compact, from_triples,
                   generate_cyclic)

CYCLIC_SPECS: dict[str, CyclicSpec] = {
    "C1": CyclicSpec(21, ((0, 1, 3), (0, 4, 12), (0, 5, 11), (0, 7, 14))),
    "C2": CyclicSpec(21, ((0, 1, 3), (0, 4, 12), (0, 5, 15), (0, 7, 14))),
    "C3": CyclicSpec(21, ((0, 1, 5), (0, 2, 10), (0, 3, 9), (0, 7, 14))),
    "C5": CyclicSpec(21, ((0, 1, 5), (0, 2, 13), (0, 3, 9), (0, 7, 14))),
}

LISTINGS: dict[str, str] = {
    "F72": "2468bcfgjk578cbgfkj867degfik7ihdekj8gfjkihaihkjghiedjkjkceihfgkjhikjhi",
    # no parallel class; an order-3 automorphism acts as seven 3-cycles
    "FNOPC1": "fh6idgkacjge7jihdbkkc8fjbei5acfgjidbhgkj9efhikkjcehicdhedgikjkkjfhjgki",
    "FNOPC2": "kj69cfedgiid7acghejbe8hdcfk5ekicgjicjdkhdjekhibagfk9hgkfhjkjfighkjiijk",
    "FNOPC3": "269cikhdjgd7aijefkhbe8kjgciha9chkjibfdikjegjkia9jhgbkfhifgfhdjgekekjki",
    "FNOPC4": "kj697acfhii87abdfgjb689ehgkgfehkjihcfikjdjgkiikcjfhjdkghiehggfkhijejkk",
    "FNOPC5": "kj6f7dachii87gedbfjh68cbegkji9gdkfkaehgibfchjdcjhikekfjigijkhkfjgkjikh",
    "FNOPC6": "26fdejcigke7gkchdjihc8dikfejbajgidk9hkjeiifkejcejgfdgkhfhiedcjhkhkjgik",
    "FNOPC7": "kj69dcbegiie7a9dcjhbc8eadhkgf9ikjhhjaikfbkjgi8dfikegijchkjfhgkghjfkikj",
    "FNOPC8": "kj6f7acdgii87gbedhjh689cefkjigfbkekhbgeifahdj8hkgjifijhkjgikfgkhjfkikj",
    "FNOPC9": "kj6b7cafhii879dbfgja68ebhgkcehfgjkdfhgkjgfhikikjhcfjdkfggeihkijikjejik",
    # no parallel class; three fixed points and six 3-cycles
    "FNOPC10": "2678cdeijk9abdecjkiijk9abfghgfbaekjhb9dika9jeikjifhigjhhkghgfjkfkgjhik",
    "FNOPC11": "2678cdeijk9abfghijkdecjkighfcebjgkidk9hjiaifkjdcighehjffkgbkjkijiehhgk",
    "FNOPC12": "2678cdeijk9abcdejkicdefghijkhgafjikfgbkij9hikj8kdijeijkjckibfhghhggfhk",
    "FNOPC13": "2678cdeijk9abfghijk786kijhfgjibgekhk9hdigafjehedbgjkcbhkjafikgjikhjfik",
    "FNOPC14": "2678cdeijk9abdecjkiijkab9hfgcejgfhkdhkfgiifhgjgfeckhdckedjkjiijkikgjhh",
    "FNOPC15": "2678cdeijk9abdecjkiijk9abfgh5cajhgkbdkhfie9igfjhgfkjfgikhjkgfjihjkikeh",
    "FNOPC16": "2678cdeijk9abdecjki867ijkhfgjidhgekkehfdicgfejjibkhgkaifhjbghkfgijhkjk",
    # balance-marked set; FBAL2/FBAL5 really only realize (7,7,7)
    "FBAL1": "2468bcfgjk56jkcbgfi65ihacegkdahjgik9eifkhjgbekijhcfjdhkifekgdjkijhikhj",
    "FBAL2": "2678cdeijk9abfghjkiijkecdfghkjdchgfidehfgcegfh8ikjhkjihjikgedcekijikjk",
    "FBAL3": "2468bcfgjk578dehijk867jkchig7ihfgkj8kjihgfcbihkjadeihkgfjkeiedgfkjhikj",
    "FBAL4": "2468bcfgjk56jkcbgfi65ihacegkdahkgij9eifjhkgbekijhcfjdhkifekgdjkijhijhk",
    "FBAL5": "2468bcfgjk578achijk867cbjkhi7ihdekj8fgkjihhijkgfjkhiegedgfikgfedkjkjih",
    "FHEXFREE": "2468bcfgjkde78afgik78hijkcegjahegki9kidjfhgbdikfcehjgjdhkkfiejihhikjkj",
    "F108": "2468bcfgjk578achijk867cbjkhi7ihfgkj8dekjihhijkgfjkhiegedgfkjgfedikkjih",
    "FCROWNMAX": "2468bcfgjkbcdejkagi9afghicekh7fjigk8igkhjfaekgj9dfjkcdikbehjijhhikjikh",
    "F294": "2468acegik56ijbghfk659fkdjihcehdgkjkhfcijggajkehidbeifjkbhjcikkijhfjgk",
    "F54": "2468acegik857kfehij678gjidhk7bcfgjk8idkfjhdejkhichgkfjhifgjkebjgikjkhi",
    "FTWIN1A": "kj69cfegihid7acgjhfbe8hdfkggfaihjkhjbfik9kgjiedbikcbjiajkkeieijdjkhghk",
    "FTWIN1B": "269cfegihkd7acgjhfkbe8hdfkgjgfaihjkhjbfik9kgjiedbikcbjiajkkeieijdjkhgh",
    "FTWIN2A": "kj69cfbdhiid7a9gefjbe8hacgka9ikjfhbijgkhkjhigbaefj9dgkheihgikjfijkkjik",
    "FTWIN2B": "269cfbdhikd7a9gefjkbe8hacgkja9ikjfhbijgkhkjhigbaefj9dgkheihgikjfijkkji",
    "FTWIN3A": "ed69chbjikcd7a9fkjibe8gaijkji8cfkhk8dgih7hejgejfhkkcgfjdighkgfjhkiejki",
    "FTWIN3B": "269chbjeikd7a9fkejibe8gaidjkji8cfkhk8dgih7hejgejfhkkcgfjdighkgfjhkijki",
    "FTWIN4A": "26bcgfakjid79ghbkijae8fhbjik87gehik6chfjkdfgkjkjiehdifjcedgkekjikjighh",
    "FTWIN4B": "a96bcgfkjibd79ghkijae8fhjik87gehik6chfjkdfgkjkjiehdifjcedgkebkjikjighh",
    "FTWIN5A": "26bcgfakjid79ghbkijae8fhbjik87gcfjk6dhgkjefhikikjchejfkdeegidikjikjhgh",
    "FTWIN5B": "a96bcgfkjibd79ghkijae8fhjik87gcfjk6dhgkjefhikikjchejfkdeegidbikjikjhgh",
    "FTWIN6A": "26h7jacfik87fkdbjgig68ibehkjikafdejjbegdk9cheidcjihgejkfhikghgkhifjkjk",
    "FTWIN6B": "a96h7jcfikb87fkdjgig68iehkjikafdejjbegdk9cheidcjihgejkfhikghbgkhifjkjk",
    "FMITRE1": "2678cdeijk9abfghijkdeckijghfjibakfhkb9giha9hjg8jhgikjfhifkgbekiejidkjk",
    "F2P1": "2468acegik69beghjikcfa8jdehkdgkfbhjjaheigkicgkhcbgijkkdfijhfejkfijkhij",
    "F2P2": "2468acegik69ejcfhgkgjh8kicdfchkeifj7bidgkh9jgkiadjikhgiefbhgjkfjhkjikj",
    "F2P3": "2468acegikh8adjcfgk9igkcdfejd7egkijkbdhjgff9ijhijefheigkcjhkdkihkhkijj",
    "F2P4": "2468acegikajhdf9gekgekihbcjfeb9hjki8gcdfikafdijjfkcheikdkgjhjikihjghjk",
    "F2PNONISO": "2468acegikgkfbh9jdich8djegfkajkhdifcfeaigjbgijkighkecfgdjkikjeihjhkkhj",
}

TWIN_PAIRS = (
    ("FTWIN1A", "FTWIN1B"),
    ("FTWIN2A", "FTWIN2B"),
    ("FTWIN3A", "FTWIN3B"),
    ("FTWIN4A", "FTWIN4B"),
    ("FTWIN5A", "FTWIN5B"),
    ("FTWIN6A", "FTWIN6B"),
)

FNOPC_SEVEN_3CYCLES = tuple(f"FNOPC{i}" for i in range(1, 10))
FNOPC_THREE_FIXED = tuple(f"FNOPC{i}" for i in range(10, 17))
BALANCED = tuple(f"FBAL{i}" for i in range(1, 6))
TWO_PASCH = ("F2P1", "F2P2", "F2P3", "F2P4")


SMALL = ("STS3", "STS7", "STS9", "STS13A", "STS13B", "STS15")


def names() -> tuple[str, ...]:
    return tuple(CYCLIC_SPECS) + tuple(LISTINGS) + SMALL


def sts21_names() -> tuple[str, ...]:
    return tuple(CYCLIC_SPECS) + tuple(LISTINGS)


@lru_cache(maxsize=None)
def get(name: str) -> TripleSystem:
    if name in CYCLIC_SPECS:
        return generate_cyclic(CYCLIC_SPECS[name])
    if name in LISTINGS:
        return decode_compact(LISTINGS[name], 21)
    small = {"STS3": sts3, "STS7": sts7, "STS9": sts9,
             "STS13A": sts13_cyclic, "STS13B": sts13_noncyclic,
             "STS15": sts15_pg32}
    if name in small:
        return small[name]()
    raise KeyError(f"unknown fixture {name!r} (see fixtures.names())")


@lru_cache(maxsize=None)
def sts3() -> TripleSystem:
    return from_triples(3, [(0, 1, 2)])


@lru_cache(maxsize=None)
def sts7() -> TripleSystem:
    return generate_cyclic(CyclicSpec(7, ((0, 1, 3),)))


@lru_cache(maxsize=None)
def sts9() -> TripleSystem:
    """AG(2,3): points 3i+j, lines = zero-sum triples of F_3 x F_3."""
    triples = []
    pts = [(i, j) for i in range(3) for j in range(3)]
    for a in range(9):
        for b in range(a + 1, 9):
            (x1, y1), (x2, y2) = pts[a], pts[b]
            cx, cy = (-x1 - x2) % 3, (-y1 - y2) % 3
            c = 3 * cx + cy
            if c > b:
                triples.append((a, b, c))
    return from_triples(9, triples)


@lru_cache(maxsize=None)
def sts13_cyclic() -> TripleSystem:
    return generate_cyclic(CyclicSpec(13, ((0, 1, 4), (0, 2, 7))))


# the non-cyclic STS(13) (automorphism group of order 6), reached from
# the cyclic one by a pasch switch
_STS13B_CODE = "74cb8a589cb69ac7ab8bc9cabc"


@lru_cache(maxsize=None)
def sts13_noncyclic() -> TripleSystem:
    return decode_compact(_STS13B_CODE, 13)


@lru_cache(maxsize=None)
def sts15_pg32() -> TripleSystem:
    """PG(3,2): points 1..15 as nonzero GF(2)^4 vectors, shifted to 0..14."""
    triples = []
    for a in range(1, 16):
        for b in range(a + 1, 16):
            c = a ^ b
            if c > b:
                triples.append((a - 1, b - 1, c - 1))
    return from_triples(15, triples)
