import json

import pytest

from taskdag.errors import ConfigError
from taskdag.graph import OrderedDag, empty_graph
from taskdag.harness import (
    derive_seed,
    export,
    growth_experiment,
    run_trials,
    table_experiment,
)
from taskdag.processes import ProcessConfig, ProcessKind


def _cfg(x, y, n, kind=ProcessKind.REMOVAL, **kw):
    return ProcessConfig(x, y, n, kind, seed=0, **kw)


class TestRunTrials:
    def test_point_mass_config(self):
        summary = run_trials(_cfg(1, 1, 3), 200, master_seed=1)
        assert summary.success_ratio == 1.0
        assert summary.mean_edges == 2.0

    def test_summary_fields(self):
        summary = run_trials(_cfg(1, 2, 6), 100, master_seed=7)
        assert summary.trials == 100
        assert 0.0 <= summary.success_ratio <= 1.0
        assert summary.kind is ProcessKind.REMOVAL
        assert summary.m is None

    def test_rejects_zero_trials(self):
        with pytest.raises(ConfigError, match="trials"):
            run_trials(_cfg(1, 1, 4), 0, master_seed=1)

    def test_propagates_config_errors(self):
        with pytest.raises(ConfigError):
            run_trials(_cfg(3, 1, 2), 10, master_seed=1)

    def test_master_seed_changes_results(self):
        a = run_trials(_cfg(1, 3, 6), 400, master_seed=1)
        b = run_trials(_cfg(1, 3, 6), 400, master_seed=2)
        assert (a.success_ratio, a.mean_edges) != (b.success_ratio, b.mean_edges)

    def test_per_trial_records(self):
        summary = run_trials(_cfg(1, 1, 5), 50, master_seed=3, keep_per_trial=True)
        assert summary.per_trial is not None and len(summary.per_trial) == 50
        assert summary.success_ratio == sum(r[0] for r in summary.per_trial) / 50

    def test_parallel_equals_serial(self):
        serial = run_trials(_cfg(1, 2, 7), 1200, master_seed=5, parallelism=1)
        parallel = run_trials(_cfg(1, 2, 7), 1200, master_seed=5, parallelism=4)
        assert serial.to_json() == parallel.to_json()

    def test_combined_success_requires_budget(self):
        cfg = _cfg(1, 1, 7, kind=ProcessKind.COMBINED, m=12)
        summary = run_trials(cfg, 100, master_seed=11)
        assert summary.success_ratio == 1.0
        assert summary.mean_edges == 12.0

    def test_tree_kind(self):
        summary = run_trials(_cfg(1, 1, 10, kind=ProcessKind.RANDOM_TREE), 80, master_seed=2)
        assert summary.mean_edges == 9.0

    def test_json_shape(self):
        payload = json.loads(run_trials(_cfg(1, 1, 4), 10, master_seed=1).to_json())
        assert payload["kind"] == "removal"
        assert payload["trials"] == 10
        assert set(payload) == {
            "kind",
            "x",
            "y",
            "n",
            "m",
            "semantics",
            "trials",
            "master_seed",
            "success_ratio",
            "mean_edges",
            "mean_longest_path",
            "mean_isolated",
        }


class TestDerivedSeeds:
    def test_deterministic(self):
        assert derive_seed(1, 2, 3) == derive_seed(1, 2, 3)

    def test_spread(self):
        seeds = {derive_seed(9, i) for i in range(100)}
        assert len(seeds) == 100

    def test_order_sensitive(self):
        assert derive_seed(1, 2) != derive_seed(2, 1)


class TestTableExperiment:
    def test_schema_and_determinism(self):
        csv = table_experiment(
            ProcessKind.REMOVAL, [(1, 2), (2, 2)], range(4, 6), 60, master_seed=3
        )
        lines = csv.strip().split("\n")
        assert lines[0] == "pair,n,ratio"
        assert len(lines) == 1 + 2 * 2
        assert lines[1].startswith("1-2,4,")
        again = table_experiment(
            ProcessKind.REMOVAL, [(1, 2), (2, 2)], range(4, 6), 60, master_seed=3
        )
        assert csv == again

    def test_x_equals_y_rows_are_exact(self):
        csv = table_experiment(ProcessKind.REMOVAL, [(2, 2)], [5, 6], 150, master_seed=1)
        for line in csv.strip().split("\n")[1:]:
            assert line.endswith(",1.0000")

    def test_ratio_formatting(self):
        csv = table_experiment(ProcessKind.ADDITION, [(1, 3)], [5], 40, master_seed=8)
        ratio = csv.strip().split("\n")[1].split(",")[2]
        assert len(ratio.split(".")[1]) == 4


class TestGrowthExperiment:
    def test_schema(self):
        csv = growth_experiment(ProcessKind.REMOVAL, 1, 1, [4, 6], 50, master_seed=2)
        lines = csv.strip().split("\n")
        assert lines[0] == "n,mean_edges,mean_longest_path,mean_isolated"
        assert len(lines) == 3

    def test_removal_density_band(self):
        csv = growth_experiment(ProcessKind.REMOVAL, 1, 1, [12], 300, master_seed=4)
        mean_edges = float(csv.strip().split("\n")[1].split(",")[1])
        assert 12 - 1 <= mean_edges <= 2 * 12 - 4

    def test_parallel_equals_serial(self):
        kw = dict(trials=600, master_seed=5)
        a = growth_experiment(ProcessKind.ADDITION, 1, 2, [6], parallelism=1, **kw)
        b = growth_experiment(ProcessKind.ADDITION, 1, 2, [6], parallelism=4, **kw)
        assert a == b


class TestExport:
    def test_json_bytes(self):
        g = OrderedDag.from_edges(3, [(1, 2), (2, 3)])
        assert export(g, "json") == b'{"n":3,"edges":[[1,2],[2,3]]}'

    def test_json_empty(self):
        assert export(empty_graph(2), "json") == b'{"n":2,"edges":[]}'

    def test_dot_round(self):
        g = OrderedDag.from_edges(2, [(1, 2)])
        assert export(g, "dot") == b"digraph {\n  1;\n  2;\n  1 -> 2;\n}\n"

    def test_repeat_identical(self):
        g = OrderedDag.from_edges(3, [(1, 3)])
        assert export(g, "json") == export(g, "json")

    def test_unknown_format(self):
        with pytest.raises(ValueError, match="unknown export format"):
            export(empty_graph(1), "yaml")
