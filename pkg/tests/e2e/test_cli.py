"""
End-to-End Tests for the widthkit command line

Test Categories:
1. Decision commands on the checked-in fixtures
2. Constructions and file output
3. Repeatable output
4. Exit codes for budget refusals, format errors and usage errors
"""

import logging

import pytest

from backend.core.families import far_a
from backend.core.operations import is_deterministic
from config import current_budgets
from scripts.widthkit_cli import cli
from shared.formats import automaton_type, load_automaton

pytestmark = pytest.mark.e2e


# ============================================================================
# Fixtures
# ============================================================================

@pytest.fixture
def run(capsys):
    """Run the CLI and return (exit code, stdout lines, stderr)"""
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level

    def _run(*argv):
        code = cli([str(arg) for arg in argv])
        captured = capsys.readouterr()
        return code, captured.out.splitlines(), captured.err

    yield _run
    root.handlers[:] = handlers
    root.setLevel(level)


# ============================================================================
# Test Cases
# ============================================================================

class TestDecisions:

    def test_width(self, run, fixtures_dir):
        code, out, _ = run("width", fixtures_dir / "far_a_m3.aut")

        assert code == 0
        assert out[0] == "width=2"
        assert out[1].startswith("k=1 gfg=false")
        assert out[2].startswith("k=2 gfg=true")

    def test_width_out_of_range(self, run, fixtures_dir):
        code, out, _ = run("width", fixtures_dir / "a3.aut", "--max-k", 2)

        assert code == 0
        assert out[0] == "width=none"
        assert out[-1] == "width_lower_bound=3"

    def test_gfg_writes_pruning(self, run, fixtures_dir, test_output_dir):
        target = test_output_dir / "universal2_pruned.aut"

        code, out, _ = run("gfg", fixtures_dir / "universal2.aut", "--out", target)
        assert code == 0
        assert out == ["verdict=true", f"pruning={target}"]
        assert is_deterministic(load_automaton(target))

    def test_dbp_writes_pruning(self, run, fixtures_dir, test_output_dir):
        target = test_output_dir / "ham4_pruned.aut"

        code, out, _ = run("dbp", fixtures_dir / "ham4.aut", "--out", target)
        assert code == 0
        assert out == ["verdict=true", f"pruning={target}"]
        assert target.read_text(encoding="utf-8").startswith("# pruning:")
        pruned = load_automaton(target)
        assert automaton_type(pruned) == "nca"
        assert is_deterministic(pruned)

    def test_dbp_without_pruning_writes_nothing(self, run, fixtures_dir, test_output_dir):
        target = test_output_dir / "far_a_pruned.aut"

        assert run("dbp", fixtures_dir / "far_a_m3.aut", "--out", target)[1] == ["verdict=false"]
        assert not target.exists()

    def test_solve_gc(self, run, fixtures_dir):
        code, out, _ = run("solve-gc", fixtures_dir / "running.gc")

        assert code == 0
        assert out[0] == "winner=0"

    def test_ambiguity(self, run, fixtures_dir):
        code, out, _ = run("ambiguity", fixtures_dir / "universal2.aut", "--max-len", 3)

        assert code == 0
        assert out == ["len=0 max=1", "len=1 max=2", "len=2 max=4", "len=3 max=8"]

    def test_gfg_and_dbp(self, run, fixtures_dir):
        assert run("gfg", fixtures_dir / "far_a_m3.aut")[1] == ["verdict=false"]
        assert run("dbp", fixtures_dir / "universal2.aut")[1] == ["verdict=true"]

    def test_member(self, run, fixtures_dir):
        assert run("member", fixtures_dir / "e1.aut", "--word", "a a")[1] == ["member=true"]
        assert run("member", fixtures_dir / "e1.aut", "--word", "")[1] == ["member=false"]
        assert run("member", fixtures_dir / "ham4.aut", "--upword", ": a_1 #")[1] == ["member=true"]

    def test_sim(self, run, fixtures_dir):
        path = fixtures_dir / "far_a_m3.aut"

        assert run("sim", path, path, "--k", 1)[1] == ["sim=true"]

    def test_reduce_ham_check(self, run, fixtures_dir):
        code, out, _ = run("reduce-ham", fixtures_dir / "ham4.graph", "--check")

        assert code == 0
        assert out == ["states=12", "dbp=true", "hamiltonian=true", "cycle=1 2 4 3"]

    def test_reduce_ham_without_cycle(self, run, fixtures_dir):
        _, out, _ = run("reduce-ham", fixtures_dir / "bowtie.graph", "--check")

        assert "dbp=false" in out
        assert "hamiltonian=false" in out
        assert not any(line.startswith("cycle=") for line in out)


class TestConstructions:

    def test_family_round_trip(self, run, test_output_dir):
        target = test_output_dir / "far_a.aut"

        code, out, _ = run("family", "far-a", "--param", 3, "--out", target)
        assert code == 0
        assert out[0] == "states=8"
        assert list(load_automaton(target).edges()) == list(far_a(3).edges())

    def test_incremental_determinize(self, run, fixtures_dir, test_output_dir):
        target = test_output_dir / "dfa.aut"

        code, out, _ = run("determinize", fixtures_dir / "far_a_m3.aut", "--method", "incremental", "--out", target)
        assert code == 0
        assert "width=2" in out
        assert "states=5" in out
        assert load_automaton(target).state_count == 5

    def test_subset_minimize(self, run, fixtures_dir):
        _, out, _ = run("determinize", fixtures_dir / "a3.aut", "--method", "subset", "--minimize")

        assert "states=8" in out
        assert "choice_points=0" in out

    def test_reduce_gc(self, run, fixtures_dir, test_output_dir):
        target = test_output_dir / "running_reduction.aut"

        code, out, _ = run("reduce-gc", fixtures_dir / "running.gc", "--out", target)
        assert code == 0
        assert out[0] == "k=4"
        assert f"out={target}" in out
        states = next(int(line.split("=")[1]) for line in out if line.startswith("states="))
        assert load_automaton(target).state_count == states

    @pytest.mark.slow
    def test_reduce_gc_check(self, run, fixtures_dir):
        code, out, _ = run("reduce-gc", fixtures_dir / "running.gc", "--check")

        assert code == 0
        assert out[0] == "k=4"
        assert out[-1] == "width_le_k=true"

    def test_equiv(self, run, fixtures_dir, test_output_dir):
        target = test_output_dir / "dfa.aut"
        run("determinize", fixtures_dir / "far_a_m3.aut", "--method", "subset", "--out", target)

        code, out, _ = run("equiv", fixtures_dir / "far_a_m3.aut", target, "--max-len", 6)
        assert code == 0
        assert out == ["equivalent=true"]

    def test_equiv_counterexample(self, run, fixtures_dir, test_output_dir):
        target = test_output_dir / "far_a_2.aut"
        run("family", "far-a", "--param", 2, "--out", target)

        _, out, _ = run("equiv", fixtures_dir / "far_a_m3.aut", target, "--max-len", 4)
        assert out[0] == "equivalent=false"
        assert out[1].startswith("counterexample=")


class TestStableOutput:
    """The same command prints the same bytes and writes the same files"""

    @pytest.mark.parametrize("argv", [
        ("width", "far_a_m3.aut"),
        ("determinize", "far_a_m3.aut", "--method", "k-subset:2"),
        ("dbp", "ham4.aut"),
        ("reduce-ham", "ham4.graph", "--check"),
        ("ambiguity", "universal2.aut", "--max-len", 3),
    ], ids=lambda argv: argv[0])
    def test_stdout_is_repeatable(self, run, fixtures_dir, argv):
        command, name, *rest = argv

        first = run(command, fixtures_dir / name, *rest)
        second = run(command, fixtures_dir / name, *rest)
        assert first[0] == second[0] == 0
        assert first[1] == second[1]

    def test_written_files_are_repeatable(self, run, fixtures_dir, test_output_dir):
        paths = [test_output_dir / "safra_1.aut", test_output_dir / "safra_2.aut"]
        for path in paths:
            run("determinize", fixtures_dir / "buchi_finitely_many_b.aut", "--method", "safra", "--out", path)

        assert paths[0].read_bytes() == paths[1].read_bytes()


class TestExitCodes:

    def test_budget_refusal(self, run, fixtures_dir):
        before = current_budgets()

        code, out, err = run("--state-budget", 1, "detwidth", fixtures_dir / "far_a_m3.aut")
        assert code == 2
        assert any(line.startswith("refused=") for line in out)
        assert "budget=1" in out
        assert "refuted=" in out
        assert "❌" in err
        assert current_budgets() == before

    def test_format_error(self, run, test_output_dir):
        bad = test_output_dir / "bad.aut"
        bad.write_text("@type nfa\n@alphabet a\n@states two\n", encoding="utf-8")

        code, _, err = run("width", bad)
        assert code == 1
        assert "line 3" in err

    def test_missing_file(self, run, test_output_dir):
        assert run("width", test_output_dir / "absent.aut")[0] == 1

    @pytest.mark.parametrize("argv", [
        [],
        ["family", "no-such-family", "--out", "x.aut"],
        ["width"],
        ["width", "x.aut", "--max-k", "two"],
    ])
    def test_usage_errors(self, run, argv):
        code, _, err = run(*argv)
        assert code == 1
        assert "usage error" in err

    def test_method_needs_bound(self, run, fixtures_dir):
        code, _, err = run("determinize", fixtures_dir / "e1.aut", "--method", "k-subset")

        assert code == 1
        assert "needs a bound" in err
