#!/usr/bin/env python3
"""
widthkit CLI - width, GFG and DBP checks on automaton files

Results go to stdout as key=value lines, logging to stderr.

Exit codes:
    0  verdict computed (true or false)
    1  usage, format or precondition error
    2  a budget guard refused the computation

Usage:
    python scripts/widthkit_cli.py width test_data/far_a_m3.aut
    python scripts/widthkit_cli.py solve-gc test_data/running.gc
    python scripts/widthkit_cli.py ambiguity test_data/universal2.aut --max-len 3
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

# Add project root to path
project_root = Path(__file__).resolve().parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from backend.common.errors import BudgetExceededError, FormatError, WidthkitError  # noqa: E402
from backend.constructions import k_breakpoint, k_safra, k_subset, safra  # noqa: E402
from backend.core import (  # noqa: E402
    Automaton,
    CoBuchi,
    UPWord,
    breakpoint_determinize,
    max_ambiguity_profile,
    minimize_dfa,
    subset_construction,
)
from backend.core.families import FAMILIES  # noqa: E402
from backend.core.models import AutomatonStats, Buchi  # noqa: E402
from backend.core.operations import member_finite, member_up, sampled_equivalence  # noqa: E402
from backend.gfg import (  # noqa: E402
    dbp_check_buchi,
    dbp_check_nca,
    dbp_check_nfa,
    dbp_check_rabin,
    gfg_check_nca,
    gfg_check_nfa,
    strategy_pruning,
)
from backend.hardness import (  # noqa: E402
    build_ham_nca,
    build_reduction,
    cycle_from_pruning,
    find_hamiltonian_cycle,
    reduction_width_le,
    solve_gc,
)
from backend.sim import decide_sim  # noqa: E402
from backend.width import det_width, incremental_determinize_nfa, width_nca, width_nfa  # noqa: E402
from config import Budgets, current_budgets, override_budgets  # noqa: E402
from shared.formats import load_automaton, load_gc, load_graph, save_automaton  # noqa: E402
from src.utils.logger import setup_logger  # noqa: E402

logger = logging.getLogger("widthkit.cli")


class UsageError(Exception):
    """Bad command line"""


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting on bad input"""

    def error(self, message: str):
        raise UsageError(message)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _emit(key: str, value) -> None:
    if isinstance(value, bool):
        value = _flag(value)
    print(f"{key}={value}")


# ============================================================================
# Subcommands
# ============================================================================

def cmd_width(args) -> int:
    a = load_automaton(args.file)
    if a.is_finite:
        report = width_nfa(a, args.max_k, args.from_k, no_duplication=args.no_duplication,
                           with_construction=True)
    elif isinstance(a.acceptance, CoBuchi):
        if args.no_duplication:
            logger.warning("--no-duplication only applies to finite-word automata; ignored")
        report = width_nca(a, args.max_k, args.from_k)
    else:
        raise ValueError(f"width is supported for nfa and nca files, not {a.kind.value}")
    _emit("width", report.width if report.width is not None else "none")
    for v in report.verdicts:
        states = v.construction_states if v.construction_states is not None else "-"
        print(f"k={v.k} gfg={_flag(v.wins)} states={states}")
    if report.width is None:
        _emit("width_lower_bound", report.lower_bound)
    return 0


def _write_pruned(a: Automaton, pruning, out: Optional[str]) -> None:
    if out and pruning is not None:
        save_automaton(pruning.apply(a), out, comment="\n".join(["pruning:"] + pruning.render(a)))
        _emit("pruning", out)


def cmd_gfg(args) -> int:
    a = load_automaton(args.file)
    if a.is_finite:
        verdict, strategy = gfg_check_nfa(a)
        _emit("verdict", verdict)
        if verdict:
            _write_pruned(a, strategy_pruning(a, strategy), args.out)
    elif isinstance(a.acceptance, CoBuchi):
        verdict, _ = gfg_check_nca(a)
        _emit("verdict", verdict)
        if args.out:
            logger.warning("GFG coBüchi automata need not be DBP; no pruning written")
    else:
        raise ValueError(f"gfg is supported for nfa and nca files, not {a.kind.value}")
    return 0


def cmd_dbp(args) -> int:
    a = load_automaton(args.file)
    if a.is_finite:
        verdict, pruning = dbp_check_nfa(a)
    elif isinstance(a.acceptance, CoBuchi):
        verdict, pruning = dbp_check_nca(a)
    elif isinstance(a.acceptance, Buchi):
        verdict, pruning = dbp_check_buchi(a)
    else:
        verdict, pruning = dbp_check_rabin(a)
    _emit("verdict", verdict)
    _write_pruned(a, pruning, args.out)
    return 0


def cmd_detwidth(args) -> int:
    a = load_automaton(args.file)
    k = det_width(a, args.max_k)
    _emit("det_width", k if k is not None else "none")
    return 0


def _method(text: str):
    """'k-subset:2' -> ('k-subset', 2)"""
    name, _, bound = text.partition(":")
    if name in ("k-subset", "k-breakpoint", "k-safra"):
        if not bound.isdigit():
            raise UsageError(f"--method {name} needs a bound, e.g. {name}:2")
        return name, int(bound)
    if bound or name not in ("subset", "breakpoint", "safra", "incremental"):
        raise UsageError(f"unknown --method {text!r}")
    return name, None


def cmd_determinize(args) -> int:
    a = load_automaton(args.file)
    name, k = _method(args.method)
    builders: Dict[str, Callable[[], Automaton]] = {
        "subset": lambda: subset_construction(a),
        "k-subset": lambda: k_subset(a, k),
        "breakpoint": lambda: breakpoint_determinize(a),
        "k-breakpoint": lambda: k_breakpoint(a, k),
        "safra": lambda: safra(a),
        "k-safra": lambda: k_safra(a, k),
    }
    if name == "incremental":
        report, result = incremental_determinize_nfa(a)
        _emit("width", report.width if report.width is not None else "none")
    else:
        result = builders[name]()
        if args.minimize:
            result = minimize_dfa(result)
    stats = AutomatonStats.of(result)
    _emit("method", args.method)
    _emit("states", stats.states)
    _emit("transitions", stats.transitions)
    _emit("choice_points", stats.nondeterministic_points)
    if args.out:
        save_automaton(result, args.out, comment=f"{args.method} of {args.file}")
        _emit("out", args.out)
    return 0


def cmd_sim(args) -> int:
    a = load_automaton(args.a)
    b = load_automaton(args.b)
    _emit("sim", decide_sim(a, b, args.k, no_duplication=args.no_duplication))
    return 0


def _parse_upword(a: Automaton, text: str) -> UPWord:
    if text.count(":") != 1:
        raise UsageError("--upword expects 'u : v'")
    prefix, period = text.split(":")
    return UPWord(a.alphabet.parse_word(prefix), a.alphabet.parse_word(period))


def cmd_member(args) -> int:
    a = load_automaton(args.file)
    if a.is_finite:
        if args.word is None:
            raise UsageError("finite-word automata need --word")
        _emit("member", member_finite(a, a.alphabet.parse_word(args.word)))
    else:
        if args.upword is None:
            raise UsageError("infinite-word automata need --upword")
        _emit("member", member_up(a, _parse_upword(a, args.upword)))
    return 0


def cmd_ambiguity(args) -> int:
    a = load_automaton(args.file)
    for length, best in max_ambiguity_profile(a, args.max_len):
        print(f"len={length} max={best}")
    return 0


def cmd_solve_gc(args) -> int:
    instance = load_gc(args.file)
    winner, strategy = solve_gc(instance)
    _emit("winner", winner)
    _emit("strategy_moves", len(strategy))
    return 0


def cmd_reduce_gc(args) -> int:
    instance = load_gc(args.file)
    a, k = build_reduction(instance, check_universal=not args.skip_universal_check)
    _emit("k", k)
    _emit("states", a.state_count)
    _emit("letters", len(a.alphabet))
    if args.out:
        save_automaton(a, args.out, comment=f"G_c reduction of {args.file}, k={k}")
        _emit("out", args.out)
    if args.check:
        _emit("width_le_k", reduction_width_le(a, k))
    return 0


def cmd_reduce_ham(args) -> int:
    g = load_graph(args.file)
    a = build_ham_nca(g)
    _emit("states", a.state_count)
    if args.out:
        save_automaton(a, args.out, comment=f"Hamiltonian-cycle reduction of {args.file}")
        _emit("out", args.out)
    if args.check:
        verdict, pruning = dbp_check_nca(a)
        cycle = find_hamiltonian_cycle(g)
        _emit("dbp", verdict)
        _emit("hamiltonian", cycle is not None)
        if pruning is not None:
            chosen = cycle_from_pruning(g, pruning)
            if chosen is not None:
                _emit("cycle", " ".join(str(v) for v in chosen))
    return 0


def cmd_equiv(args) -> int:
    a = load_automaton(args.a)
    b = load_automaton(args.b)
    witness = sampled_equivalence(a, b, args.max_len, args.up_prefix, args.up_period)
    _emit("equivalent", witness is None)
    if witness is not None:
        if isinstance(witness, UPWord):
            rendered = witness.render(a.alphabet)
        else:
            rendered = " ".join(a.alphabet.decode(witness)) or "ε"
        _emit("counterexample", rendered)
    return 0


def cmd_family(args) -> int:
    if args.name not in FAMILIES:
        raise UsageError(f"unknown family {args.name!r}; choose from {', '.join(sorted(FAMILIES))}")
    builder = FAMILIES[args.name]
    a = builder(args.param) if args.param is not None else builder()
    _emit("states", a.state_count)
    save_automaton(a, args.out, comment=f"family {args.name}" + (f" n={args.param}" if args.param else ""))
    _emit("out", args.out)
    return 0


# ============================================================================
# Parser
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="widthkit", description="Width, GFG and DBP checks for automata")
    p.add_argument("--config", help="YAML budget profile")
    p.add_argument("--log-level", default="WARNING", help="DEBUG, INFO, WARNING or ERROR")
    p.add_argument("--state-budget", type=int)
    p.add_argument("--pruning-budget", type=int)
    p.add_argument("--arena-budget", type=int)
    p.add_argument("--ambiguity-budget", type=int)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("width", help="least k with Player 0 winning the width game")
    s.add_argument("file")
    s.add_argument("--max-k", type=int)
    s.add_argument("--from-k", type=int, default=1)
    s.add_argument("--no-duplication", action="store_true")
    s.set_defaults(handler=cmd_width)

    for name, handler, text in (("gfg", cmd_gfg, "good-for-games check"),
                                ("dbp", cmd_dbp, "determinisable-by-pruning check")):
        s = sub.add_parser(name, help=text)
        s.add_argument("file")
        s.add_argument("--out", help="write the pruned automaton here")
        s.set_defaults(handler=handler)

    s = sub.add_parser("detwidth", help="least k with a DBP k-construction")
    s.add_argument("file")
    s.add_argument("--max-k", type=int)
    s.set_defaults(handler=cmd_detwidth)

    s = sub.add_parser("determinize", help="run one construction")
    s.add_argument("file")
    s.add_argument("--method", required=True,
                   help="subset|k-subset:K|breakpoint|k-breakpoint:K|safra|k-safra:K|incremental")
    s.add_argument("--minimize", action="store_true", help="minimise the result (deterministic finite words)")
    s.add_argument("--out")
    s.set_defaults(handler=cmd_determinize)

    s = sub.add_parser("sim", help="k-pebble simulation A ⊑_k B")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--no-duplication", action="store_true")
    s.set_defaults(handler=cmd_sim)

    s = sub.add_parser("member", help="membership of a word or ultimately periodic word")
    s.add_argument("file")
    group = s.add_mutually_exclusive_group(required=True)
    group.add_argument("--word")
    group.add_argument("--upword")
    s.set_defaults(handler=cmd_member)

    s = sub.add_parser("ambiguity", help="max accepting runs per word length")
    s.add_argument("file")
    s.add_argument("--max-len", type=int, required=True)
    s.set_defaults(handler=cmd_ambiguity)

    s = sub.add_parser("solve-gc", help="winner of the formula game")
    s.add_argument("file")
    s.set_defaults(handler=cmd_solve_gc)

    s = sub.add_parser("reduce-gc", help="formula game to width automaton")
    s.add_argument("file")
    s.add_argument("--out")
    s.add_argument("--check", action="store_true", help="also decide width <= k")
    s.add_argument("--skip-universal-check", action="store_true")
    s.set_defaults(handler=cmd_reduce_gc)

    s = sub.add_parser("reduce-ham", help="graph to coBüchi automaton")
    s.add_argument("file")
    s.add_argument("--out")
    s.add_argument("--check", action="store_true", help="also run the DBP check and the brute-force oracle")
    s.set_defaults(handler=cmd_reduce_ham)

    s = sub.add_parser("equiv", help="sampled language equivalence")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--max-len", type=int)
    s.add_argument("--up-prefix", type=int)
    s.add_argument("--up-period", type=int)
    s.set_defaults(handler=cmd_equiv)

    s = sub.add_parser("family", help="write a built-in automaton family")
    s.add_argument("name")
    s.add_argument("--param", type=int)
    s.add_argument("--out", required=True)
    s.set_defaults(handler=cmd_family)
    return p


def _install_budgets(args) -> bool:
    updates = {
        key: value
        for key, value in (("state_budget", args.state_budget), ("pruning_budget", args.pruning_budget),
                           ("arena_budget", args.arena_budget), ("ambiguity_budget", args.ambiguity_budget))
        if value is not None
    }
    if not args.config and not updates:
        return False
    base = Budgets.from_yaml(args.config) if args.config else current_budgets()
    override_budgets(Budgets(**{**base.model_dump(), **updates}))
    return True


def cli(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command; returns the exit code"""
    installed = False
    try:
        args = build_parser().parse_args(list(sys.argv[1:] if argv is None else argv))
        if not getattr(args, "handler", None):
            raise UsageError("missing subcommand")
        setup_logger("", args.log_level, stream=sys.stderr)
        installed = _install_budgets(args)
        return args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceededError as exc:
        _emit("refused", exc.what)
        _emit("budget", exc.budget)
        _emit("observed", exc.observed)
        if isinstance(exc.partial, list):
            _emit("refuted", ",".join(str(k) for k in exc.partial))
        print(f"❌ {exc}", file=sys.stderr)
        return 2
    except (FormatError, ValueError, OSError) as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return 1
    except WidthkitError as exc:
        logger.error(f"internal check failed: {exc}")
        return 1
    finally:
        if installed:
            override_budgets(None)


def main() -> None:
    sys.exit(cli())


if __name__ == "__main__":
    main()
