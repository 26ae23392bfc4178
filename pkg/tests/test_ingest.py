import json

import pytest

from atlas_forge.genpipe.mock import mock_provider
from atlas_forge.genpipe.provider import RepairExhausted
from atlas_forge.ingest import (
    DuplicateId,
    FormatError,
    IncidentRecord,
    incident_to_use,
    load_incidents,
)
from .conftest import DATA_DIR


def write_csv(tmp_path, rows, header="incident_id,title,description,date"):
    path = tmp_path / "incidents.csv"
    path.write_text("\n".join([header, *rows]) + "\n", encoding="utf-8")
    return path


class TestLoadCsv:
    def test_two_rows(self, tmp_path):
        path = write_csv(
            tmp_path,
            [
                "1,Title one,Something went wrong,2020-01-01",
                "2,Title two,Something else went wrong,",
            ],
        )
        records = load_incidents(path, "csv")
        assert len(records) == 2
        assert records[0] == IncidentRecord(1, "Title one", "Something went wrong", "2020-01-01")
        assert records[1].date is None

    def test_empty_description_rejected_with_row(self, tmp_path):
        path = write_csv(tmp_path, ["1,Title,desc,2020-01-01", "2,Title, ,"])
        with pytest.raises(FormatError, match="row 3"):
            load_incidents(path, "csv")

    def test_duplicate_id(self, tmp_path):
        path = write_csv(tmp_path, ["7,A,first,", "7,B,second,"])
        with pytest.raises(DuplicateId, match="7"):
            load_incidents(path, "csv")

    def test_non_integer_id(self, tmp_path):
        path = write_csv(tmp_path, ["x,A,desc,"])
        with pytest.raises(FormatError, match="row 2"):
            load_incidents(path, "csv")

    def test_bad_header(self, tmp_path):
        path = write_csv(tmp_path, ["1,desc"], header="incident_id,description")
        with pytest.raises(FormatError, match="header"):
            load_incidents(path, "csv")

    def test_bad_date(self, tmp_path):
        path = write_csv(tmp_path, ["1,A,desc,not-a-date"])
        with pytest.raises(FormatError, match="ISO date"):
            load_incidents(path, "csv")

    def test_sample_fixture_loads(self):
        records = load_incidents(DATA_DIR / "incidents_sample.csv", "csv")
        assert len(records) == 10


class TestLoadJson:
    def test_array_of_records(self, tmp_path):
        path = tmp_path / "incidents.json"
        path.write_text(
            json.dumps(
                [
                    {"incident_id": 1, "title": "A", "description": "first incident"},
                    {"incident_id": 2, "title": "B", "description": "second incident", "date": "2021-05-01"},
                ]
            )
        )
        records = load_incidents(path, "json")
        assert [r.incident_id for r in records] == [1, 2]

    def test_invalid_json_reports_offset(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("[{]")
        with pytest.raises(FormatError, match="offset"):
            load_incidents(path, "json")

    def test_unknown_format(self, tmp_path):
        with pytest.raises(ValueError, match="unknown format"):
            load_incidents(tmp_path / "x.csv", "xml")


class TestIncidentToUse:
    def test_youtube_fixture_components(self):
        incident = IncidentRecord(
            1,
            "Children exposed to disturbing videos",
            "YouTube's recommendation algorithms exposed children to disturbing videos",
        )
        use = incident_to_use(mock_provider(1), incident)
        assert use.purpose == "Recommending suitable videos for children"
        assert use.ai_subject == "Children"
        assert use.source_incident_ids == frozenset({1})

    def test_any_incident_gives_valid_use(self):
        from atlas_forge.model import validate_use

        incident = IncidentRecord(55, "Mispriced fares", "A dynamic pricing model overcharged commuters")
        use = incident_to_use(mock_provider(2), incident)
        assert validate_use(use).ok

    def test_always_invalid_provider_exhausts(self):
        class BrokenProvider:
            max_retries = 2

            def complete(self, prompt, feedback=()):
                return "{}"

        incident = IncidentRecord(1, "t", "something happened")
        with pytest.raises(RepairExhausted):
            incident_to_use(BrokenProvider(), incident)
