import json
import random

import pytest

from atlas_forge.model import empty_dataset
from atlas_forge.serialization import (
    AtlasFormatError,
    parse_atlas,
    serialize_atlas,
)
from .conftest import random_dataset


class TestRoundTrip:
    def test_empty_dataset_round_trips(self):
        dataset = empty_dataset("facial recognition")
        assert parse_atlas(serialize_atlas(dataset)) == dataset

    def test_single_use_round_trips_byte_identically(self):
        rng = random.Random(1)
        while True:
            dataset = random_dataset(rng, max_uses=1)
            if dataset.uses:
                break
        data = serialize_atlas(dataset)
        assert serialize_atlas(parse_atlas(data)) == data

    def test_structural_equality_after_parse(self):
        for seed in range(30):
            dataset = random_dataset(random.Random(seed))
            assert parse_atlas(serialize_atlas(dataset)) == dataset

    def test_canonical_bytes_are_stable(self):
        dataset = random_dataset(random.Random(3))
        assert serialize_atlas(dataset) == serialize_atlas(dataset)


class TestCanonicalForm:
    def test_sorted_keys_and_lf(self):
        data = serialize_atlas(empty_dataset())
        text = data.decode("utf-8")
        assert "\r" not in text
        assert text.endswith("\n")
        obj = json.loads(text)
        assert list(obj) == sorted(obj)

    def test_floats_quantized_to_six_decimals(self):
        import dataclasses

        rng = random.Random(4)
        while True:
            dataset = random_dataset(rng, max_uses=2)
            if dataset.uses:
                break
        uid = dataset.uses[0].id
        coords = dict(dataset.coords)
        coords[uid] = (0.123456789, 0.987654321)
        noisy = dataclasses.replace(dataset, coords=coords)
        parsed = parse_atlas(serialize_atlas(noisy))
        assert parsed.coords[uid] == (0.123457, 0.987654)


class TestParseRejections:
    def test_unknown_schema_version(self):
        obj = json.loads(serialize_atlas(empty_dataset()))
        obj["schema_version"] = 99
        with pytest.raises(AtlasFormatError, match="schema_version"):
            parse_atlas(json.dumps(obj).encode())

    def test_coordinate_out_of_range(self):
        rng = random.Random(5)
        while True:
            dataset = random_dataset(rng, max_uses=2)
            if dataset.uses:
                break
        obj = json.loads(serialize_atlas(dataset))
        uid = dataset.uses[0].id
        obj["coords"][uid] = [1.5, 0.5]
        with pytest.raises(AtlasFormatError, match="coordinate out of range"):
            parse_atlas(json.dumps(obj).encode())

    def test_not_json(self):
        with pytest.raises(AtlasFormatError):
            parse_atlas(b"not json at all")

    def test_missing_key(self):
        obj = json.loads(serialize_atlas(empty_dataset()))
        del obj["uses"]
        with pytest.raises(AtlasFormatError, match="uses"):
            parse_atlas(json.dumps(obj).encode())

    def test_bad_risk_level_value(self):
        rng = random.Random(6)
        while True:
            dataset = random_dataset(rng, max_uses=2)
            if dataset.uses:
                break
        obj = json.loads(serialize_atlas(dataset))
        obj["uses"][0]["risk_level"] = "catastrophic"
        with pytest.raises(AtlasFormatError, match="RiskLevel"):
            parse_atlas(json.dumps(obj).encode())
