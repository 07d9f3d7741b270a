import json

from apolar.bounds.table import cached_hilbert
from apolar.store.models import HilbertFunction, InvariantKind, Mode
from apolar.store.results import ResultStore


class TestResultStore:
    def test_save_and_load(self, tmp_path):
        """Test a stored model comes back from a fresh store on the same file"""
        path = str(tmp_path / "results.json")
        store = ResultStore(path)
        key = ResultStore.key("det", 3, "rational")
        store.save_model("hilbert", key, HilbertFunction(invariant=InvariantKind.DETERMINANT, n=3, values=[1, 9, 9, 1]))

        loaded = ResultStore(path).load_model("hilbert", key, HilbertFunction)
        assert loaded.values == [1, 9, 9, 1]
        assert loaded.invariant == InvariantKind.DETERMINANT

    def test_upsert_replaces(self, tmp_path):
        store = ResultStore(str(tmp_path / "results.json"))
        collection = store.get_collection("hilbert")
        collection.upsert("det:2:rational", {"values": [1]})
        collection.upsert("det:2:rational", {"values": [1, 4, 1]})
        assert len(collection.find()) == 1
        assert collection.find_one("det:2:rational")["values"] == [1, 4, 1]

    def test_missing_key(self, tmp_path):
        store = ResultStore(str(tmp_path / "results.json"))
        assert store.load_model("hilbert", "pf:9:rational", HilbertFunction) is None

    def test_corrupt_file_starts_empty(self, tmp_path):
        path = tmp_path / "results.json"
        path.write_text("{not json", encoding="utf-8")
        assert ResultStore(str(path)).data == {}

    def test_invalid_document_is_ignored(self, tmp_path):
        path = tmp_path / "results.json"
        path.write_text(json.dumps({"hilbert": [{"_key": "det:2:rational", "values": "many"}]}), encoding="utf-8")
        assert ResultStore(str(path)).load_model("hilbert", "det:2:rational", HilbertFunction) is None

    def test_cached_hilbert(self, tmp_path, options):
        store = ResultStore(str(tmp_path / "results.json"))
        first = cached_hilbert(InvariantKind.PFAFFIAN, 2, options, store)
        assert first.values == [1, 6, 1]
        # a planted entry proves the second call reads the store
        store.save_model("hilbert", ResultStore.key("pf", 2, "rational"),
                         HilbertFunction(invariant=InvariantKind.PFAFFIAN, n=2, values=[1, 2, 1]))
        assert cached_hilbert(InvariantKind.PFAFFIAN, 2, options, store).values == [1, 2, 1]

    def test_modes_are_kept_apart(self, tmp_path, options, mod_p_options):
        store = ResultStore(str(tmp_path / "results.json"))
        cached_hilbert(InvariantKind.DETERMINANT, 2, options, store)
        modular = cached_hilbert(InvariantKind.DETERMINANT, 2, mod_p_options, store)
        assert modular.mode == Mode.MOD_P
        assert len(store.get_collection("hilbert").find()) == 2
