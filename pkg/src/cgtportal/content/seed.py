"""Seed content: the starting pages, prerequisite corpus, and syllabus.

The seed covers the families the course opens with (wheel, gear, odd graphs,
the block and square-of-squares families, hypercubes), each construction
bound to the compute engine so page claims stay verifiable.
"""

from __future__ import annotations

from fractions import Fraction

from cgtportal.graphs.families import FamilySpec
from cgtportal.content.model import (
    ColorCode,
    Construction,
    Corpus,
    CorpusTerm,
    LogicalPage,
    MoreRef,
    PageProperty,
    PrerequisiteBox,
    Remark,
    SyllabusMap,
    SyllabusUnit,
)

IN = ColorCode.IN_COURSE
OUT = ColorCode.OUTSIDE_COURSE

WHEEL_PAGE_ID = "ACGT-000001"
GEAR_PAGE_ID = "ACGT-000002"
ODD_PAGE_ID = "ACGT-000003"
BLOCK_PAGE_ID = "ACGT-000004"
GK_PAGE_ID = "ACGT-000005"
HYPERCUBE_PAGE_ID = "ACGT-000006"


def build_seed_corpus() -> Corpus:
    p1_terms = {
        "graphs": "A graph is a set of vertices together with a set of unordered vertex pairs called edges.",
        "combinatorial structures": "Arrangements of finite sets: selections, sequences, set systems.",
        "graphs characterized by one or more parameters": "Families such as K_n or K_{m,n} whose members are fixed by integer parameters.",
        "induced subgraphs": "The subgraph on a vertex subset keeping every edge with both ends inside it.",
        "isomorphism": "A structure-preserving bijection; two graphs are isomorphic when some vertex bijection preserves adjacency both ways.",
        "trees": "Connected graphs without cycles; n vertices force exactly n-1 edges.",
        "power set": "The set of all subsets of a set; it has 2^n members.",
        "permutations and combinations": "Ordered and unordered selections; counts n!/(n-k)! and C(n, k).",
        "Pascal's triangle": "The triangle of binomial coefficients built by the addition rule C(n,k) = C(n-1,k-1) + C(n-1,k).",
        "partitions": "Ways of writing n as an unordered sum of positive integers.",
        "recurrence relations": "Equations defining a sequence from earlier members, e.g. V_n = 2(V_{n-1} + 1).",
        "generating functions": "Formal power series whose coefficients encode a counting sequence.",
        "cycles in graphs": "Closed walks with distinct intermediate vertices; C_m is the cycle on m vertices.",
        "distance in graphs": "d(u, v) is the least number of edges on a u-v path.",
        "k-regular graphs": "Graphs in which every vertex has degree exactly k.",
    }
    corpus = Corpus()
    for term, writeup in p1_terms.items():
        corpus.add(CorpusTerm(term=term, type="P1", targets=(writeup,)))
    corpus.add(
        CorpusTerm(
            term="perfect graphs",
            type="P2",
            targets=(
                "Write-up: chromatic number equals clique number on every induced subgraph.",
                "Write-up: odd holes and odd antiholes; statement of the strong perfect graph theorem.",
            ),
        )
    )
    corpus.add(
        CorpusTerm(
            term="planarity and embeddings",
            type="P2",
            targets=(
                "Write-up: drawing graphs in the plane; Euler's formula v - e + f = 2.",
                "Write-up: Kuratowski's characterization via K_5 and K_{3,3}.",
                "Write-up: uniqueness of embeddings for 3-connected planar graphs.",
            ),
        )
    )
    return corpus


def build_seed_syllabus() -> SyllabusMap:
    units = (
        SyllabusUnit.of("U1", "Foundations", [
            "graphs", "trees", "cycles in graphs", "power set",
            "permutations and combinations", "Pascal's triangle",
        ]),
        SyllabusUnit.of("U2", "Graph families and parameters", [
            "graphs characterized by one or more parameters", "k-regular graphs",
            "isomorphism", "induced subgraphs",
        ]),
        SyllabusUnit.of("U3", "Counting and recurrences", [
            "recurrence relations", "generating functions", "partitions",
            "combinatorial structures",
        ]),
        SyllabusUnit.of("U4", "Distances and indexes", [
            "distance in graphs",
        ]),
    )
    return SyllabusMap(units=units, w1=Fraction(1), w2=Fraction(2))


def build_seed_pages() -> list[LogicalPage]:
    wheel = LogicalPage(
        id=WHEEL_PAGE_ID,
        title="Wheel graph",
        kind="special-graph",
        definition=(
            "The wheel W_n is the join of the cycle C_{n-1} with one new hub vertex: "
            "the hub is adjacent to every cycle vertex, giving n vertices and 2(n-1) edges."
        ),
        figures=("figures/wheel-6.svg",),
        constructions=(
            Construction(
                "Draw the cycle C_{n-1}, add a hub vertex, and join the hub to every cycle vertex.",
                FamilySpec("wheel", (6,)),
            ),
        ),
        properties=(
            PageProperty("For large n the ratio of edges to vertices approaches 2.", IN),
            PageProperty("Planar, with a unique planar embedding.", IN),
            PageProperty("Self-dual.", IN),
            PageProperty("A Halin graph.", OUT),
            PageProperty("A (triangulated) perfect graph.", IN),
        ),
        related=(GEAR_PAGE_ID,),
        more_to_explore=(
            MoreRef("Wheel graph overview", "https://en.wikipedia.org/wiki/Wheel_graph"),
        ),
        remarks=(
            Remark(
                "instructor",
                "The printed exercise sheet said 'ratio of edges to edges'; read it as edges to vertices.",
            ),
        ),
        prereq_boxes=(
            PrerequisiteBox(("graphs", "cycles in graphs"), "P1"),
            PrerequisiteBox(("perfect graphs",), "P2"),
        ),
        color=IN,
        computed=(("wheel(6).vertices", "6"), ("wheel(6).edges", "10")),
        status="Published",
    )

    gear = LogicalPage(
        id=GEAR_PAGE_ID,
        title="Gear graph",
        kind="special-graph",
        definition=(
            "The gear graph is the wheel W_n with one new vertex subdividing each edge of the "
            "outer cycle; it has 2n-1 vertices and 3(n-1) edges."
        ),
        constructions=(
            Construction(
                "Start from W_n and replace every rim edge uv by the path u-x-v through a fresh vertex x.",
                FamilySpec("gear", (6,)),
            ),
        ),
        properties=(
            PageProperty("Vertex and edge counts are forced: V = 2n-1, E = 3(n-1).", IN),
            PageProperty("The hub keeps degree n-1; subdividers have degree 2.", IN),
        ),
        related=(WHEEL_PAGE_ID,),
        prereq_boxes=(PrerequisiteBox(("graphs", "cycles in graphs"), "P1"),),
        color=IN,
        status="Published",
    )

    odd = LogicalPage(
        id=ODD_PAGE_ID,
        title="Odd graphs and their Wiener index",
        kind="graph-class",
        definition=(
            "The odd graph O_n has one vertex for each (n-1)-element subset of a (2n-1)-element "
            "ground set; two vertices are adjacent exactly when their subsets are disjoint. "
            "O_2 is the triangle and O_3 is the Petersen graph."
        ),
        constructions=(
            Construction(
                "List the (n-1)-subsets of {1..2n-1} in lexicographic order and join disjoint pairs.",
                FamilySpec("odd", (3,)),
            ),
        ),
        properties=(
            PageProperty("n-regular and distance-regular, with C(2n-1, n-1) vertices.", IN),
            PageProperty("The Wiener index W(O_2) = 3 and W(O_3) = 75.", IN),
            PageProperty(
                "The Wiener index has an exact closed form via the intersection arrays; "
                "the engine checks seventeen catalogued values.",
                IN,
            ),
        ),
        more_to_explore=(
            MoreRef("OEIS entry A136328: Wiener index of the odd graph", "https://oeis.org/A136328"),
            MoreRef("R. Balakrishnan, N. Sridharan, K. V. Iyer, The Wiener index of odd graphs, J. Indian Inst. Sci. 86(5), 2006."),
        ),
        historical_notes=(
            "The first seventeen Wiener indexes of odd graphs are catalogued as OEIS sequence "
            "A136328; two independently published programs compute them exactly."
        ),
        prereq_boxes=(
            PrerequisiteBox(("power set", "permutations and combinations", "distance in graphs"), "P1"),
        ),
        color=IN,
        computed=(("a136328.terms_verified", "17"),),
        status="Published",
    )

    block = LogicalPage(
        id=BLOCK_PAGE_ID,
        title="The block_n family",
        kind="graph-class",
        definition=(
            "block_1 joins two copies of a seven-vertex basic block by an edge between their "
            "degree-2 roots. To build block_{n+1}, subdivide the joining edge of each of two "
            "copies of block_n through a new center vertex and join the two centers. Every "
            "member is connected and 3-regular."
        ),
        constructions=(
            Construction(
                "Basic block: root r adjacent to A and B; A-C, A-D, B-E, B-F; C-D, C-E, D-F, E-F.",
                FamilySpec("block", (2,)),
            ),
        ),
        properties=(
            PageProperty("Counts obey V_1 = 14, E_1 = 21, V_{n+1} = 2(V_n + 1), E_{n+1} = 2 E_n + 3.", IN),
            PageProperty(
                "Assignment: find the Wiener index of block_n, the sum of distances over all "
                "distinct vertex pairs.",
                IN,
            ),
            PageProperty(
                "An extended basic block (eight extra vertices replacing the C/D/E/F cross edges) "
                "yields a second 3-regular family under the same doubling.",
                IN,
            ),
        ),
        related=(GK_PAGE_ID,),
        prereq_boxes=(
            PrerequisiteBox(("k-regular graphs", "isomorphism", "recurrence relations"), "P1"),
        ),
        color=IN,
        status="Published",
    )

    gk = LogicalPage(
        id=GK_PAGE_ID,
        title="The G_k square-of-squares family",
        kind="graph-class",
        definition=(
            "G_k grows from a braced 4-cycle by k levels; each level attaches one new square at "
            "each of the four ports, chords it, and braces consecutive squares so every vertex "
            "except the four newest ports reaches degree 4. V(G_k) = 16k + 4."
        ),
        constructions=(
            Construction(
                "Attach squares at the four ports, add one chord per square and two braces "
                "between consecutive squares; closing the final ports gives the exactly "
                "4-regular variant.",
                FamilySpec("gk-open", (1,)),
            ),
        ),
        properties=(
            PageProperty("The open variant has exactly four degree-3 vertices, the ports.", IN),
            PageProperty("The closed variant is 4-regular, so E = 2V.", IN),
            PageProperty("Exercise: give recurrences for the number of vertices and edges.", IN),
        ),
        related=(BLOCK_PAGE_ID,),
        prereq_boxes=(
            PrerequisiteBox(("k-regular graphs", "isomorphism", "recurrence relations"), "P1"),
        ),
        color=IN,
        status="Published",
    )

    cube = LogicalPage(
        id=HYPERCUBE_PAGE_ID,
        title="Binary hypercube",
        kind="graph-class",
        definition=(
            "The n-hypercube has the 2^n binary words of length n as vertices, with an edge "
            "between words differing in exactly one bit."
        ),
        constructions=(
            Construction(
                "Index vertices 0..2^n-1 and join i to i xor 2^b for every bit position b.",
                FamilySpec("hypercube", (4,)),
            ),
        ),
        properties=(
            PageProperty("n-regular with 2^n vertices and n 2^{n-1} edges.", IN),
            PageProperty(
                "Conjectured: the Wiener index equals n 4^{n-1}; verified for n = 1..5 "
                "(values 1, 8, 48, 256, 1280).",
                IN,
            ),
        ),
        prereq_boxes=(
            PrerequisiteBox(("power set", "distance in graphs"), "P1"),
        ),
        color=IN,
        computed=(("wiener(1..5)", "1,8,48,256,1280"),),
        status="Published",
    )

    return [wheel, gear, odd, block, gk, cube]
