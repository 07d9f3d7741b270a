import json
import os
from datetime import datetime
from typing import Any, Dict, List, Optional, Type, TypeVar

from pydantic import BaseModel, ValidationError

from apolar.core.config import settings
from apolar.core.logger import logger

M = TypeVar("M", bound=BaseModel)


class ResultCollection:
    """Documents of one kind, each filed under a key such as ``det:4:rational``."""

    def __init__(self, data: List[Dict[str, Any]], save_callback):
        self.data = data
        self.save_callback = save_callback

    def find_one(self, key: str) -> Optional[Dict[str, Any]]:
        for doc in self.data:
            if doc.get("_key") == key:
                return dict(doc)
        return None

    def upsert(self, key: str, document: Dict[str, Any]):
        document = dict(document)
        document["_key"] = key
        document["updated_at"] = datetime.utcnow().isoformat()
        for position, doc in enumerate(self.data):
            if doc.get("_key") == key:
                self.data[position] = document
                break
        else:
            self.data.append(document)
        self.save_callback()
        logger.debug(f"Stored result {key}")

    def find(self) -> List[Dict[str, Any]]:
        return [dict(doc) for doc in self.data]


class ResultStore:
    """JSON file of result collections; read and write failures are logged, never raised."""

    def __init__(self, file_path: Optional[str] = None):
        self.file_path = file_path or settings.RESULTS_PATH
        self.data: Dict[str, List[Dict[str, Any]]] = {}
        self._load_data()

    def _load_data(self):
        try:
            if os.path.exists(self.file_path):
                with open(self.file_path, "r", encoding="utf-8") as f:
                    self.data = json.load(f)
                logger.info(f"Loaded results from {self.file_path}: {list(self.data.keys())}")
        except Exception as e:
            logger.warning(f"Could not load result store: {e}")
            self.data = {}

    def _save_data(self):
        try:
            with open(self.file_path, "w", encoding="utf-8") as f:
                json.dump(self.data, f, indent=2, ensure_ascii=False)
        except Exception as e:
            logger.error(f"Could not save result store: {e}")

    def get_collection(self, name: str) -> ResultCollection:
        if name not in self.data:
            self.data[name] = []
            logger.debug(f"Created new collection: {name}")
        return ResultCollection(self.data[name], self._save_data)

    @staticmethod
    def key(invariant: str, n: int, mode: str) -> str:
        return f"{invariant}:{n}:{mode}"

    def save_model(self, collection: str, key: str, model: BaseModel):
        self.get_collection(collection).upsert(key, model.model_dump(mode="json", by_alias=True))

    def load_model(self, collection: str, key: str, model_type: Type[M]) -> Optional[M]:
        doc = self.get_collection(collection).find_one(key)
        if doc is None:
            return None
        doc = {k: v for k, v in doc.items() if k not in ("_key", "updated_at")}
        try:
            return model_type.model_validate(doc)
        except ValidationError as e:
            logger.warning(f"Ignoring stored {collection} entry {key}: {e.error_count()} validation errors")
            return None
