"""
Lemma suite.

Every lemma about the construction becomes one experiment on a built complex. Structural
and metric lemmas are checked exhaustively; lemmas that promise a reduction to a null form
run bounded searches, where a fully explored flip closure without a null form is a
counterexample and an exhausted budget only makes the report inconclusive.
"""
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from hiercomplex.config.settings import SuiteSettings, get_settings
from hiercomplex.construction.numbering import max_level_multiplicity
from hiercomplex.construction.pasting import (
    entry_edges,
    pasting_round,
    repeated_cores,
    simultaneous_core_conflicts,
)
from hiercomplex.construction.subdivision import Subdivider
from hiercomplex.core.builder import FIRST_PASTING_LEVEL, ComplexBuilder
from hiercomplex.core.errors import ComplexError, ErrorCategory, UnknownLemmaError
from hiercomplex.core.model import Complex
from hiercomplex.core.structure import (
    degree_drift,
    degree_snapshot,
    settled_count,
    validate_complex,
)
from hiercomplex.geodesy.metric import (
    corner_pairs,
    distance,
    distance_preservation,
    pasting_entry_distances,
    sample_pairs,
)
from hiercomplex.paths.macro import macro_flip, wiggle_into_pasting
from hiercomplex.paths.path import Move, Path, apply_moves, replay
from hiercomplex.paths.patterns import find_dead_patterns, incorrect_segments, pattern_of
from hiercomplex.paths.sampling import (
    boundary_walk,
    chain_through,
    concatenate,
    extend_both_ways,
    is_planar,
    macro_chain,
    non_backtracking_walk,
    shortest_inside,
)
from hiercomplex.paths.search import PushKind, flip_closure, push_to_boundary, search_reduction
from hiercomplex.verify.reports import LemmaReport, SuiteReport

logger = logging.getLogger(__name__)

LemmaCheck = Callable[[Complex, SuiteSettings, random.Random, LemmaReport], None]

# Attempts per requested sample before a stuck random walk is given up.
_WALK_ATTEMPTS = 8


# From this level on the global degree bounds must not move between consecutive levels.
STABLE_BOUND_LEVEL = 7


def bound_drift(max_degree: Dict[int, int], multiplicity: Dict[int, int], top: int) -> List[str]:
    """Failures for a global bound that still changes between the last two levels."""
    if top < STABLE_BOUND_LEVEL:
        return []
    messages = []
    for name, values in (("max degree", max_degree), ("incoming multiplicity", multiplicity)):
        if values[top - 1] != values[top]:
            messages.append(
                f"{name} changed {values[top - 1]} -> {values[top]} "
                f"between levels {top - 1} and {top}"
            )
    return messages


def level_of(complex_: Complex) -> int:
    return complex_.round + 1


def _moves_json(moves: Iterable[Move]) -> List[List[int]]:
    return [[m.position, m.tile] for m in moves]


def _nested_tiles(complex_: Complex, lowest: int, highest: int) -> List[Tuple[int, int]]:
    """(level, tile) of the nested upper-left tiles of the base plane within a level range."""
    return sorted(
        (p.level, p.tile) for p in corner_pairs(complex_) if lowest <= p.level <= highest
    )


def _same_construction(complex_: Complex) -> ComplexBuilder:
    with_pastings = bool(complex_.pasting_log) or level_of(complex_) < FIRST_PASTING_LEVEL
    return ComplexBuilder(complex_.rule_table, with_pastings=with_pastings)


def _reduce(
    report: LemmaReport,
    complex_: Complex,
    path: Path,
    budget: int,
    label: str,
    allowed: Optional[Set[int]] = None,
) -> Optional[bool]:
    """Run one null-form search and record it; returns None when the budget ran out."""
    outcome = search_reduction(complex_, path, budget, allowed)
    if outcome.found:
        report.witnesses.append(
            {
                "label": label,
                "path": list(path.vertices),
                "moves": _moves_json(outcome.moves),
                "visited": outcome.visited,
            }
        )
        return True
    if outcome.exhausted:
        report.fail(
            f"{label}: flip closure exhausted without a null form",
            path=list(path.vertices),
            visited=outcome.visited,
        )
        return False
    report.inconclusive(
        f"{label}: no null form within {budget} paths", path=list(path.vertices), budget=budget
    )
    return None


def _sample_extensions(
    complex_: Complex,
    core: Path,
    before: int,
    after: int,
    rng: random.Random,
    count: int,
    plane: int,
) -> List[Path]:
    samples = []
    for _ in range(count * _WALK_ATTEMPTS):
        if len(samples) == count:
            break
        path = extend_both_ways(complex_, core, before, after, rng, plane)
        if path is not None:
            samples.append(path)
    return samples


class LemmaSuite:
    """Runs lemma experiments against one complex."""

    TITLES: Dict[str, str] = {
        "L0": "Structure",
        "L1": "Degree bound",
        "L2": "Side vertices",
        "L3": "Macro flip",
        "L4": "Push to boundary",
        "L5": "Wiggle into a pasting",
        "L6": "Local segment extraction",
        "L7": "Non-extendable path",
        "L8": "Dead patterns",
        "L9": "Dead paths in the lower subtile",
        "L10": "Incorrect segments",
        "L11": "Correctness of two-sides paths",
        "L12": "Distance to a pasting entry",
        "L13": "Paths into pasted regions",
    }

    def __init__(self, complex_: Complex, settings: Optional[SuiteSettings] = None):
        self.complex = complex_
        self.settings = settings or get_settings()

    @property
    def checks(self) -> Dict[str, LemmaCheck]:
        return {
            "L0": self.check_structure,
            "L1": self.check_degree_bound,
            "L2": self.check_side_vertices,
            "L3": self.check_macro_flip,
            "L4": self.check_boundary_push,
            "L5": self.check_wiggle,
            "L6": self.check_local_segments,
            "L7": self.check_non_extendable,
            "L8": self.check_dead_patterns,
            "L9": self.check_dead_paths,
            "L10": self.check_incorrect_segments,
            "L11": self.check_correctness,
            "L12": self.check_pasting_distance,
            "L13": self.check_pasting_paths,
        }

    def resolve(self, selection: Optional[Sequence[str]]) -> List[str]:
        """
        Lemma ids to run, in suite order.

        Raises:
            UnknownLemmaError: If an id is not part of the suite
        """
        if not selection:
            return list(self.TITLES)
        wanted = []
        for lemma_id in selection:
            if lemma_id not in self.TITLES:
                raise UnknownLemmaError(lemma_id)
            if lemma_id not in wanted:
                wanted.append(lemma_id)
        return [lemma_id for lemma_id in self.TITLES if lemma_id in wanted]

    def run_lemma(self, lemma_id: str, complex_: Optional[Complex] = None) -> LemmaReport:
        """
        Run a single experiment.

        Raises:
            UnknownLemmaError: If the id is not part of the suite
        """
        if lemma_id not in self.TITLES:
            raise UnknownLemmaError(lemma_id)
        target = complex_ if complex_ is not None else self.complex
        report = LemmaReport(
            lemma=lemma_id,
            title=self.TITLES[lemma_id],
            level=level_of(target),
            parameters={"seed": self.settings.seed},
        )
        rng = random.Random(f"{self.settings.seed}:{lemma_id}")
        try:
            self.checks[lemma_id](target, self.settings, rng, report)
        except ComplexError as e:
            report.fail(f"{type(e).__name__}: {e}", ErrorCategory.STRUCTURE)
        logger.info("%s %s: %s", lemma_id, report.title, report.verdict.value)
        return report

    def run(
        self, selection: Optional[Sequence[str]] = None, workers: Optional[int] = None
    ) -> SuiteReport:
        """
        Run the selected experiments and merge them in suite order.

        With more than one worker every experiment gets its own copy of the complex, so
        caches are never shared between threads and the reports do not depend on scheduling.
        """
        lemma_ids = self.resolve(selection)
        workers = workers or self.settings.workers
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="lemma") as pool:
                futures = [
                    pool.submit(self.run_lemma, lemma_id, self.complex.copy())
                    for lemma_id in lemma_ids
                ]
                reports = [f.result() for f in futures]
        else:
            reports = [self.run_lemma(lemma_id) for lemma_id in lemma_ids]
        return SuiteReport(level=level_of(self.complex), seed=self.settings.seed, reports=reports)

    # ------------------------------------------------------------------ structural lemmas

    @staticmethod
    def check_structure(
        complex_: Complex, settings: SuiteSettings, rng: random.Random, report: LemmaReport
    ) -> None:
        result = validate_complex(complex_)
        report.details["counts"] = complex_.counts()
        report.details["euler"] = {str(p.plane): p.euler for p in result.planes}
        for violation in result.violations:
            report.fail(violation, ErrorCategory.STRUCTURE)
        for vertex in repeated_cores(complex_):
            report.fail(
                f"vertex {vertex} is a pasting core in more than one round",
                ErrorCategory.STRUCTURE,
                vertex=vertex,
            )
        rounds = sorted({r.round for r in complex_.pasting_log})
        report.details["simultaneous_core_conflicts"] = {
            str(r): len(simultaneous_core_conflicts(complex_, r)) for r in rounds
        }

    @staticmethod
    def check_degree_bound(
        complex_: Complex, settings: SuiteSettings, rng: random.Random, report: LemmaReport
    ) -> None:
        top = max(level_of(complex_), settings.degree_levels)
        report.parameters["levels"] = top
        builder = _same_construction(complex_)
        builder.start()
        history: List[Dict[int, int]] = []
        max_degree: Dict[int, int] = {}
        multiplicity: Dict[int, int] = {}
        while True:
            snapshot = degree_snapshot(builder.complex)
            history.append(snapshot)
            max_degree[builder.level] = max(snapshot.values())
            multiplicity[builder.level] = max_level_multiplicity(builder.complex)
            if builder.level >= top:
                break
            builder.advance()
        built = builder.complex
        report.details["max_degree"] = {str(level): value for level, value in max_degree.items()}
        report.details["max_incoming_multiplicity"] = {
            str(level): value for level, value in multiplicity.items()
        }
        for message in bound_drift(max_degree, multiplicity, top):
            report.fail(message, ErrorCategory.STRUCTURE, level=top)
        created = {v: vertex.created_round for v, vertex in built.vertices.items()}
        report.details["stable_vertices"] = settled_count(history, created)
        for n, v, before, after in degree_drift(history, created):
            report.fail(
                f"vertex {v} changed degree {before} -> {after} in round {n + 1}",
                ErrorCategory.STRUCTURE,
                vertex=v,
                created_round=created[v],
            )

    @staticmethod
    def check_side_vertices(
        complex_: Complex, settings: SuiteSettings, rng: random.Random, report: LemmaReport
    ) -> None:
        on_side: Set[int] = set()
        for tile in complex_.tiles.values():
            on_side.update(tile.points.get(name) for name in ("U", "R", "D", "L"))
        checked = 0
        for vertex in complex_.vertices.values():
            for tile_id, letter in vertex.midpoint_of:
                checked += 1
                if complex_.tiles[tile_id].points.get(letter) != vertex.id:
                    report.fail(
                        f"vertex {vertex.id} is not point {letter} of tile {tile_id}",
                        ErrorCategory.STRUCTURE,
                        vertex=vertex.id,
                        tile=tile_id,
                    )
            if vertex.kind.is_midpoint and vertex.id not in on_side:
                report.fail(
                    f"midpoint vertex {vertex.id} is not the midpoint of any tile side",
                    ErrorCategory.STRUCTURE,
                    vertex=vertex.id,
                )
        report.details["incidences"] = checked

    @staticmethod
    def check_macro_flip(
        complex_: Complex, settings: SuiteSettings, rng: random.Random, report: LemmaReport
    ) -> None:
        tiles = _nested_tiles(complex_, 1, min(5, level_of(complex_)))
        if complex_.pasting_log:
            tile = complex_.pasting_log[0].tile
            tiles.append((complex_.tile_level(tile), tile))
        flips = 0
        for level, tile in tiles:
            starts = range(0, 8, 2) if level == 1 else range(8)
            for s in starts:
                path = complex_.half_perimeter(tile, s)
                moves = macro_flip(complex_, path, tile)
                final = replay(complex_, path, moves)[-1]
                expected = tuple(complex_.half_perimeter(tile, (s + 4) % 8)[::-1])
                flips += 1
                if final.vertices != expected:
                    report.fail(
                        f"flip of tile {tile} from point {s} ends off the opposite half",
                        tile=tile,
                        start=s,
                        final=list(final.vertices),
                    )
                elif level <= 2:
                    report.witnesses.append(
                        {"tile": tile, "start": s, "path": path, "moves": _moves_json(moves)}
                    )
        report.details["flips"] = flips

    @staticmethod
    def check_boundary_push(
        complex_: Complex, settings: SuiteSettings, rng: random.Random, report: LemmaReport
    ) -> None:
        level = level_of(complex_)
        measured = 0
        for n, tile_id in _nested_tiles(complex_, 1, min(6, level)):
            tile = complex_.tiles[tile_id]
            pairs = [("UL", "LR")] + ([("U", "D"), ("L", "R")] if n >= 2 else [])
            for first, second in pairs:
                d = distance(complex_, tile.named_point(first), tile.named_point(second))
                measured += 1
                if d != 2**n:
                    report.fail(
                        f"tile {tile_id} (level {n}): {first}-{second} distance {d}, "
                        f"expected {2 ** n}",
                        ErrorCategory.METRIC,
                        tile=tile_id,
                    )
        report.details["distances"] = measured

        pushes = {}
        for n, tile_id in _nested_tiles(complex_, 2, min(3, level)):
            tile = complex_.tiles[tile_id]
            ul, c, lr = (tile.named_point(name) for name in ("UL", "C", "LR"))
            path = concatenate(
                shortest_inside(complex_, tile_id, ul, c), shortest_inside(complex_, tile_id, c, lr)
            )
            outcome = push_to_boundary(complex_, path, tile_id, settings.push_budget)
            pushes[str(n)] = outcome.kind.value
            if outcome.kind is PushKind.EXHAUSTED:
                report.inconclusive(
                    f"push in tile {tile_id} ran out of budget", path=list(path.vertices)
                )
                continue
            if apply_moves(complex_, path, outcome.moves) != outcome.final:
                report.fail(f"push in tile {tile_id} does not replay", path=list(path.vertices))
            elif outcome.kind is PushKind.NULL and path.length == 2**n:
                report.fail(
                    f"geodesic in tile {tile_id} pushed into a null form",
                    path=list(path.vertices),
                    moves=_moves_json(outcome.moves),
                )
            else:
                report.witnesses.append(
                    {
                        "tile": tile_id,
                        "kind": outcome.kind.value,
                        "path": list(path.vertices),
                        "moves": _moves_json(outcome.moves),
                    }
                )
        report.details["pushes"] = pushes

    @staticmethod
    def check_wiggle(
        complex_: Complex, settings: SuiteSettings, rng: random.Random, report: LemmaReport
    ) -> None:
        sides = sorted(
            {s for t in complex_.tiles_of_level(4, plane=0) for s in complex_.tiles[t].sides}
        )
        checked = 0
        for segment_id in sides:
            side = complex_.segment_chain(segment_id, complex_.macro_edges[segment_id].endpoints[0])
            quarter = (len(side) - 1) // 4
            g1, h, g2 = side[quarter], side[2 * quarter], side[3 * quarter]
            record = next(
                (r for r in complex_.pastings_with_core(h) if {r.site.x1, r.site.z1} == {g1, g2}),
                None,
            )
            if record is None:
                continue
            checked += 1
            moves = wiggle_into_pasting(complex_, side)
            final = apply_moves(complex_, side, moves)
            far = final[2 * quarter]
            if far != record.t1 or complex_.vertices[far].plane == complex_.vertices[h].plane:
                report.fail(
                    f"wiggle of side {segment_id} did not reach the far corner of tile "
                    f"{record.tile}",
                    segment=segment_id,
                    final=list(final.vertices),
                )
            elif distance(complex_, h, far) < 2:
                report.fail(
                    f"wiggle of side {segment_id}: far corner {far} adjacent to {h}",
                    ErrorCategory.METRIC,
                    segment=segment_id,
                )
            else:
                report.witnesses.append(
                    {"side": side, "tile": record.tile, "moves": _moves_json(moves)}
                )
        report.details["sides"] = len(sides)
        report.details["wiggled"] = checked

    # ------------------------------------------------------------------ reduction lemmas

    @staticmethod
    def check_local_segments(
        complex_: Complex, settings: SuiteSettings, rng: random.Random, report: LemmaReport
    ) -> None:
        level = level_of(complex_)
        budget = settings.reduce_budget
        report.parameters["budget"] = budget
        shortest: Dict[str, Optional[int]] = {}
        for n, tile_id in _nested_tiles(complex_, 2, min(3, level)):
            allowed = set(complex_.descendants_minimal(tile_id))
            half_side = complex_.side_length(tile_id) // 2
            length = 5 * 2 ** (n - 2)
            for s in range(8):
                walk = boundary_walk(complex_, tile_id, s * half_side, length)
                label = f"boundary walk {s} of tile {tile_id}"
                _reduce(report, complex_, walk, budget, label, allowed)
            for names in (("UL", "U", "A", "C", "B"), ("L", "A", "U", "B", "C")):
                path = chain_through(complex_, tile_id, names)
                label = "-".join(names) + f" in tile {tile_id}"
                _reduce(report, complex_, path, budget, label, allowed)

            shortest[str(n)] = None
            for candidate in range(2, length + 1):
                found = any(
                    search_reduction(
                        complex_,
                        boundary_walk(complex_, tile_id, start, candidate),
                        budget,
                        allowed,
                    ).found
                    for start in (0, half_side)
                )
                if found:
                    shortest[str(n)] = candidate
                    break
        report.details["shortest_reducible_boundary_walk"] = shortest

    @staticmethod
    def check_non_extendable(
        complex_: Complex, settings: SuiteSettings, rng: random.Random, report: LemmaReport
    ) -> None:
        level = level_of(complex_)
        for n, tile_id in _nested_tiles(complex_, 2, min(3, level - 1)):
            plane = complex_.tiles[tile_id].plane
            core = chain_through(complex_, tile_id, ("L", "A", "U", "B", "R"))
            extra = core.length + 1
            for i in range(settings.samples_per_lemma):
                before, after = (extra, 0) if i % 2 else (0, extra)
                for path in _sample_extensions(complex_, core, before, after, rng, 1, plane):
                    label = f"{'WP' if before else 'PW'} on tile {tile_id}"
                    _reduce(report, complex_, path, settings.reduce_budget, label)

    @staticmethod
    def check_dead_patterns(
        complex_: Complex, settings: SuiteSettings, rng: random.Random, report: LemmaReport
    ) -> None:
        level = level_of(complex_)
        shapes = {
            "AUB": ("A", "U", "B"),
            "ACB": ("A", "C", "B"),
            "CXD": ("C", "LL", "D"),
            "DXC": ("D", "LR", "C"),
        }
        for n, tile_id in _nested_tiles(complex_, 2, min(3, level - 1)):
            plane = complex_.tiles[tile_id].plane
            for name, names in shapes.items():
                core = chain_through(complex_, tile_id, names)
                matches = find_dead_patterns(pattern_of(complex_, core))
                if not any(m.name == name and m.tile == tile_id for m in matches):
                    report.fail(
                        f"{name} path in tile {tile_id} does not carry its pattern",
                        path=list(core.vertices),
                    )
                    continue
                margin = 2 * core.length
                for path in _sample_extensions(
                    complex_, core, margin, margin, rng, settings.samples_per_lemma, plane
                ):
                    label = f"{name} in tile {tile_id}"
                    _reduce(report, complex_, path, settings.reduce_budget, label)

    @staticmethod
    def check_dead_paths(
        complex_: Complex, settings: SuiteSettings, rng: random.Random, report: LemmaReport
    ) -> None:
        level = level_of(complex_)
        for n, tile_id in _nested_tiles(complex_, 2, min(3, level - 1)):
            plane = complex_.tiles[tile_id].plane
            margin = 2 ** (n + 1) + 1
            for corner in ("LL", "LR"):
                inward = macro_chain(complex_, tile_id, "C", corner)
                along = macro_chain(complex_, tile_id, corner, "D")
                core = Path((inward[-2], inward[-1], along[1]))
                for path in _sample_extensions(
                    complex_, core, margin, margin, rng, settings.samples_per_lemma, plane
                ):
                    _reduce(
                        report,
                        complex_,
                        path,
                        settings.reduce_budget,
                        f"corner {corner} of tile {tile_id}",
                    )

    @staticmethod
    def check_incorrect_segments(
        complex_: Complex, settings: SuiteSettings, rng: random.Random, report: LemmaReport
    ) -> None:
        level = level_of(complex_)
        for _, tile_id in _nested_tiles(complex_, 2, min(3, level - 1)):
            plane = complex_.tiles[tile_id].plane
            core = Path(
                (
                    macro_chain(complex_, tile_id, "U", "A")[1],
                    complex_.tiles[tile_id].named_point("U"),
                    macro_chain(complex_, tile_id, "U", "B")[1],
                )
            )
            found = incorrect_segments(complex_, core)
            if not found:
                report.fail(
                    f"segment at U of tile {tile_id} is not incorrect", path=list(core.vertices)
                )
                continue
            n = complex_.tile_level(found[0][1])
            margin = 2 ** (n + 2) + 1
            for path in _sample_extensions(
                complex_, core, margin, margin, rng, settings.samples_per_lemma, plane
            ):
                _reduce(report, complex_, path, settings.reduce_budget, f"U of tile {tile_id}")

    @staticmethod
    def check_correctness(
        complex_: Complex, settings: SuiteSettings, rng: random.Random, report: LemmaReport
    ) -> None:
        level = min(level_of(complex_), FIRST_PASTING_LEVEL - 1)
        pure = complex_
        if level != level_of(complex_):
            pure = ComplexBuilder(complex_.rule_table, with_pastings=False).build(level)
        report.parameters.update({"closure_level": level, "budget": settings.closure_budget})
        visited = {}
        for n, tile_id in _nested_tiles(pure, 2, level):
            for s in (0, 2):
                path = pure.half_perimeter(tile_id, s)
                target = pure.half_perimeter(tile_id, s + 4)[::-1]
                summary = flip_closure(pure, path, settings.closure_budget, target=target)
                visited[f"{tile_id}:{s}"] = summary.visited
                if summary.null_found or summary.incorrect_found:
                    kind = "null form" if summary.null_found else "incorrect segment"
                    report.fail(
                        f"two sides of tile {tile_id} flip into a {kind}",
                        path=path,
                        witness=summary.witness,
                        moves=summary.witness_moves,
                    )
                elif not summary.exhausted:
                    report.inconclusive(f"closure of tile {tile_id} hit its budget", path=path)
                elif not summary.target_found:
                    report.fail(
                        f"closure of two sides of tile {tile_id} misses the other two sides",
                        path=path,
                    )
        report.details["visited"] = visited

    @staticmethod
    def check_pasting_distance(
        complex_: Complex, settings: SuiteSettings, rng: random.Random, report: LemmaReport
    ) -> None:
        entries = pasting_entry_distances(complex_)
        report.details["entries"] = len(entries)
        for entry in entries:
            if not entry.ok:
                report.fail(
                    f"entry vertex {entry.vertex} of pasted tile {entry.pasted_tile} at "
                    f"distance {entry.distance} from its host, bound {entry.bound}",
                    ErrorCategory.METRIC,
                    **entry.model_dump(),
                )
        if entries:
            report.details["min_slack"] = min(e.distance - e.bound for e in entries)

        level = level_of(complex_)
        if level < FIRST_PASTING_LEVEL or not complex_.pasting_log:
            return
        work = ComplexBuilder(complex_.rule_table).build(level - 1)
        Subdivider.subdivide_round(work, work.rule_table)
        before = work.copy()
        pasting_round(work)
        if level == FIRST_PASTING_LEVEL:
            pairs = list(combinations(sorted(before.vertices), 2))
        else:
            pairs = sample_pairs(before, settings.metric_sample_pairs, settings.seed)
        changes = distance_preservation(before, work, pairs)
        report.details["metric_pairs"] = len(pairs)
        for change in changes[:20]:
            report.fail(
                f"pasting changed distance {change.source}-{change.target}: "
                f"{change.before} -> {change.after}",
                ErrorCategory.METRIC,
                **change.model_dump(),
            )

    @staticmethod
    def check_pasting_paths(
        complex_: Complex, settings: SuiteSettings, rng: random.Random, report: LemmaReport
    ) -> None:
        records = complex_.pasting_log
        entries: Dict[int, List[Tuple[int, int]]] = {}
        exits: Set[Tuple[int, int]] = set()
        for record in records:
            edges = entry_edges(complex_, record)
            entries[record.plane] = edges
            exits.update((inner, side) for side, inner in edges)

        candidates = 0
        for record in records[: settings.samples_per_lemma]:
            path = _three_entry_path(complex_, entries, record.plane)
            if path is None:
                continue
            candidates += 1
            if is_planar(complex_, path):
                report.fail("path through three pasted regions is planar", path=list(path))
            else:
                report.witnesses.append({"three_entries": list(path.vertices)})
        report.details["three_entry_candidates"] = candidates

        walks = 0
        for record in records[: settings.samples_per_lemma]:
            n = complex_.tile_level(record.tile)
            edges = entries[record.plane]
            if not edges:
                continue
            side, inner = edges[rng.randrange(len(edges))]
            for _ in range(_WALK_ATTEMPTS):
                walk = non_backtracking_walk(
                    complex_,
                    side,
                    2 ** (n + 1),
                    rng,
                    prefix=(side, inner),
                    forbidden_steps=exits,
                )
                if walk is not None:
                    walks += 1
                    _reduce(
                        report,
                        complex_,
                        walk,
                        settings.reduce_budget,
                        f"walk into pasted tile {record.tile}",
                    )
                    break
        report.details["entry_walks"] = walks


def _three_entry_path(
    complex_: Complex, entries: Dict[int, List[Tuple[int, int]]], first_plane: int
) -> Optional[Path]:
    """
    Path a1 i1 ... a2 i2 ... a3 i3 whose steps a_k -> i_k are entry edges of three pasted
    planes, joined by shortest paths inside the plane just entered.
    """
    if not entries.get(first_plane):
        return None
    side, inner = entries[first_plane][0]
    vertices = [side, inner]
    plane = first_plane
    for _ in range(2):
        graph = nx.Graph([tuple(e) for e in complex_.plane_edges(plane)])
        reach = nx.single_source_shortest_path(graph, vertices[-1])
        options = sorted(
            (len(reach[a]), a, i, p)
            for p, edges in entries.items()
            if p != plane
            for a, i in edges
            if a in reach
        )
        if not options:
            return None
        _, a, i, plane = options[0]
        vertices.extend(reach[a][1:] + [i])
    return Path(tuple(vertices))
