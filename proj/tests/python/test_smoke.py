import pytest

import circuitgp as cg

TABLE3 = """inputs: A2 A1 A0
outputs: F
000 0
001 0
010 0
011 1
100 1
101 1
110 1
111 1
"""

GOLDEN = "(AND (OR A0 A2) (OR A2 A1))"


@pytest.fixture
def table():
    return cg.parse_table(TABLE3)


def test_table_accessors(table):
    assert table.n_inputs == 3
    assert table.n_outputs == 1
    assert table.row_count == 8
    assert table.output_names == ["F"]
    assert table.output_bits(0) == [0, 0, 0, 1, 1, 1, 1, 1]
    assert cg.parse_table(table.serialize()) == table


def test_prefix_round_trip_and_metrics():
    c = cg.parse_prefix(GOLDEN, 3)
    assert c.to_prefix() == GOLDEN
    assert len(c) == 7
    assert c.metrics() == {"node_count": 7, "depth": 3, "contains_sequential": False}
    assert c.to_dot().startswith("digraph circuit {")


def test_fitness_and_verify(table):
    golden = cg.parse_prefix(GOLDEN, 3)
    assert cg.fitness(golden, table) == (0, 8)
    assert cg.verify(golden, table) == (True, None)

    a0 = cg.parse_prefix("A0", 3)
    assert cg.fitness(a0, table) == (3, 8)
    assert cg.verify(a0, table) == (False, "001")
    assert cg.error_percent(3, 8) == pytest.approx(37.5)


def test_table_from_expression_matches_sample(table):
    assert cg.table_from_expression(cg.parse_prefix(GOLDEN, 3), 3) == table


def test_errors_carry_codes():
    with pytest.raises(cg.CircuitError) as info:
        cg.parse_prefix("(XOR A0 A1)", 2)
    assert info.value.code == "UnknownFunction"
    assert isinstance(info.value, ValueError)

    with pytest.raises(cg.CircuitError) as info:
        cg.parse_table("inputs: A0\noutputs: F\n0 0\n0 1\n")
    assert info.value.code == "DuplicateCombination"
    assert info.value.line == 4


def test_evolution_solves_sample_and_is_deterministic(table):
    config = cg.EvolutionConfig()
    config.population_size = 100
    config.max_generations = 50
    assert config.functions == ["AND", "OR", "NOT", "HA", "FA"]

    first = cg.run_evolution(table, 0, config, 11)
    second = cg.run_evolution(table, 0, config, 11)
    assert first.solved
    assert first.champion == second.champion
    assert cg.verify(first.champion, table)[0]
    assert first.history[0]["generation"] == 1
    assert first.convergence_csv().startswith("generation,best_error_pct")


def test_synthesize_reports_verified_outputs(table):
    config = cg.EvolutionConfig()
    config.population_size = 100
    config.seed = 5
    config.weights = {"Grow": 0}
    assert config.weights["Grow"] == 0
    (out,) = cg.synthesize(table, config)
    assert out["name"] == "F"
    assert out["solved"]
    assert out["verdict"] == "Correct"
    assert cg.verify(cg.parse_prefix(out["circuit"], 3), table)[0]


def test_invalid_config_rejected(table):
    config = cg.EvolutionConfig()
    config.population_size = 7
    with pytest.raises(cg.CircuitError) as info:
        config.validate()
    assert info.value.code == "InvalidConfig"
