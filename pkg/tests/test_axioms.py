import json

import diffmonads as dm
from diffmonads import GenConfig, prime_field, rationals

Q = rationals()
F2 = prime_field(2)
F3 = prime_field(3)
F5 = prime_field(5)

CONFIGS = [
    ("poly", Q, None),
    ("power", Q, 4),
    ("power", F5, 4),
    ("divided", Q, None),
    ("divided", F2, None),
    ("divided", F3, None),
    ("zinbiel", Q, None),
    ("zinbiel", F2, None),
    ("trivial", Q, None),
]


def test_axiom_suites_quick_pass():
    cfg = GenConfig(seed=42)
    for kind, field, cap in CONFIGS:
        theory = dm.make_theory(kind, field, cap or 6)
        reports = dm.check_all(theory, cfg, trials=15)
        failing = [r.axiom for r in reports if not r.passed]
        assert not failing, f"{theory}: {failing}"
        assert len(reports) == 18


def test_report_families():
    theory = dm.make_theory("trivial", Q)
    cfg = GenConfig(seed=1)
    cd = dm.check_cd_axioms(theory, cfg, trials=3)
    assert [r.axiom for r in cd] == [f"CD.{i}" for i in range(1, 8)]
    dc = dm.check_dc_axioms(theory, cfg, trials=3)
    assert [r.axiom for r in dc] == [f"dc.{i}" for i in range(1, 7)]
    laws = dm.check_monad_and_unit_laws(theory, cfg, trials=3)
    assert [r.axiom for r in laws] == [
        "monad.assoc", "monad.unit-left", "monad.unit-right", "du.1", "du.2"]


def test_mutations_are_caught():
    cfg = GenConfig(seed=7)
    for mutation, field in [("zinbiel-last-letter", Q),
                            ("powerseries-drop-first-partial", Q),
                            ("dividedpower-binomial-factor", Q),
                            ("dividedpower-binomial-factor", F2)]:
        counts = dm.mutation_is_caught(mutation, field, cfg, trials=60)
        assert any(counts.values()), f"{mutation} over {field} went unnoticed"


def test_failures_carry_replayable_seeds():
    cfg = GenConfig(seed=7)
    broken = dm.MutatedTheory("zinbiel-last-letter", Q)
    first = dm.cdc.run_axiom("dc.4", broken, cfg, 60)
    second = dm.cdc.run_axiom("dc.4", broken, cfg, 60)
    assert first.failures and len(first.failures) == len(second.failures)
    for a, b in zip(first.failures, second.failures):
        assert (a.seed, a.inputs, a.lhs, a.rhs) == (b.seed, b.inputs, b.lhs, b.rhs)


def test_report_json_schema():
    theory = dm.make_theory("trivial", Q)
    report = dm.cdc.run_axiom("CD.1", theory, GenConfig(seed=3), 5)
    data = report.to_json()
    assert set(data) == {"axiom", "trials", "failures"}
    timed = report.to_json(include_millis=True)
    assert set(timed) == {"axiom", "trials", "failures", "millis"}
    json.dumps(data)  # serializable
    broken = dm.MutatedTheory("powerseries-drop-first-partial", Q, 4)
    failing = dm.cdc.run_axiom("dc.3", broken, GenConfig(seed=3), 5)
    blob = failing.to_json()
    assert blob["failures"], "mutation should fail dc.3"
    entry = blob["failures"][0]
    assert set(entry) == {"seed", "inputs", "lhs", "rhs"}


def test_mutated_theory_keeps_monad_structure():
    # mutations only replace the combinator; the monad laws still pass
    cfg = GenConfig(seed=9)
    broken = dm.MutatedTheory("zinbiel-last-letter", Q)
    for axiom in ("monad.assoc", "monad.unit-left", "monad.unit-right", "du.1"):
        assert dm.cdc.run_axiom(axiom, broken, cfg, 10).passed
