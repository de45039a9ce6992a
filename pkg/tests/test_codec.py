"""Tests for JSON loading and model <-> runtime conversion."""

import json

import pytest

from conftest import GF7
from reflexa.algebras import base_algebra, truncated_polynomial
from reflexa.bialgebras import group_bialgebra, symmetric_group
from reflexa.codec import (
    InputError,
    algebra_from_model,
    algebra_to_model,
    bialgebra_from_model,
    bialgebra_to_model,
    direct_system_to_model,
    dump_model,
    field_from_spec,
    functional_from_model,
    functional_to_model,
    load_model,
    matrix_from_model,
    parse_model,
    prefix_from_model,
    tower_from_model,
    tower_to_model,
    universe_from_model,
)
from reflexa.findual import RecursiveFunctional
from reflexa.linalg import QQ, FieldMismatchError, LinalgError
from reflexa.model import (
    GFSpec,
    MatrixModel,
    ModuleModel,
    MorphismModel,
    SequencePrefixModel,
    TowerModel,
    UniverseModel,
)
from reflexa.towers import dual_tower, power_series_tower


# ---------------------------------------------------------------------------
# Files
# ---------------------------------------------------------------------------

class TestParse:
    def test_valid(self):
        m = parse_model('{"field": {"GF": 7}, "rank": 2}', ModuleModel)
        assert m.rank == 2
        assert field_from_spec(m.field) == GF7

    def test_defaults(self):
        m = parse_model('{"rank": 0}', ModuleModel)
        assert m.field == "Q"
        assert m.label == ""

    def test_malformed_json_has_line(self):
        text = '{\n  "rank": 2,\n}\n'
        with pytest.raises(InputError, match=r"^m\.json:3: malformed JSON") as exc:
            parse_model(text, ModuleModel, "m.json")
        assert exc.value.source_line == 3

    def test_invalid_field_is_located(self):
        text = '{\n  "field": "Q",\n  "rank": -1\n}\n'
        with pytest.raises(InputError, match=r"m\.json:3: rank: Input should be greater than or equal to 0"):
            parse_model(text, ModuleModel, "m.json")

    def test_cross_field_check(self):
        text = json.dumps({"levels": [{"rank": 1}, {"rank": 1}], "maps": []})
        with pytest.raises(InputError, match="2 levels need 1 maps, got 0"):
            parse_model(text, TowerModel)

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError, match="cannot read file"):
            load_model(tmp_path / "absent.json", ModuleModel)

    def test_load(self, tmp_path):
        path = tmp_path / "m.json"
        path.write_text(dump_model(ModuleModel(rank=3, label="M")), encoding="utf-8")
        assert load_model(path, ModuleModel) == ModuleModel(rank=3, label="M")

    def test_dump_is_stable(self):
        m = ModuleModel(field=GFSpec(GF=5), rank=1)
        assert dump_model(m) == '{\n  "field": {\n    "GF": 5\n  },\n  "rank": 1,\n  "label": ""\n}\n'


# ---------------------------------------------------------------------------
# Conversion
# ---------------------------------------------------------------------------

class TestFields:
    def test_non_prime_modulus(self):
        with pytest.raises(LinalgError, match="prime modulus"):
            field_from_spec(GFSpec(GF=4))

    def test_scalar_from_other_field(self):
        m = MatrixModel(rows=1, cols=1, entries=[["3 mod 5"]])
        with pytest.raises(FieldMismatchError, match="not over"):
            matrix_from_model(GF7, m)

    def test_modular_scalar_over_q(self):
        m = MatrixModel(rows=1, cols=1, entries=[["3 mod 5"]])
        with pytest.raises(FieldMismatchError):
            matrix_from_model(QQ, m)

    def test_integer_scalars_accepted(self):
        m = MatrixModel.model_validate({"rows": 1, "cols": 2, "entries": [[1, "1/2"]]})
        assert m.entries == [["1", "1/2"]]


class TestStructures:
    def test_algebra(self, field):
        a = truncated_polynomial(field, 3)
        model = algebra_to_model(a)
        assert model.label == "K[x]/x^3"
        assert algebra_from_model(model) == a

    def test_universe_is_closed(self):
        model = UniverseModel(
            algebras=[algebra_to_model(base_algebra(QQ)), algebra_to_model(truncated_polynomial(QQ, 2))],
            morphisms=[MorphismModel(src=1, dst=0, matrix=MatrixModel(rows=1, cols=2, entries=[["1", "0"]]))],
        )
        u = universe_from_model(model, name="dual-numbers")
        assert len(u) == 2
        # identities, unit, augmentation and their composite on K[x]/x^2
        assert len(u.morphisms) == 5

    def test_universe_indices_checked(self):
        data = {"algebras": [algebra_to_model(base_algebra(QQ)).model_dump(mode="json")], "base": 1}
        with pytest.raises(InputError, match="base index 1 out of range"):
            parse_model(json.dumps(data), UniverseModel)

    def test_tower(self, field):
        t = power_series_tower(field, 3)
        model = tower_to_model(t)
        assert [lv.rank for lv in model.levels] == [1, 2, 3, 4]
        assert tower_from_model(model) == t

    def test_direct_system(self):
        d = direct_system_to_model(dual_tower(power_series_tower(QQ, 2)))
        assert [(m.rows, m.cols) for m in d.maps] == [(2, 1), (3, 2)]

    def test_bialgebra(self):
        b = group_bialgebra(symmetric_group(3), GF7)
        model = bialgebra_to_model(b)
        assert model.field == GFSpec(GF=7)
        assert bialgebra_from_model(model) == b

    def test_functional(self):
        fib = RecursiveFunctional.fibonacci(GF7, "primitive")
        model = functional_to_model(fib)
        assert model.annihilator == ["6 mod 7", "6 mod 7", "1 mod 7"]
        assert functional_from_model(model) == fib

    def test_prefix(self):
        field, values = prefix_from_model(SequencePrefixModel(field=GFSpec(GF=7), values=[8, "1/2"]))
        assert field == GF7
        assert values == (1, 4)
