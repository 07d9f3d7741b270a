from abc import ABC, abstractmethod
from typing import Any, Dict, List

from apolar.core.logger import logger


class Observer(ABC):
    @abstractmethod
    def update(self, stage: str, payload: Dict[str, Any]):
        pass


class LogProgressObserver(Observer):
    """Streams stage updates to the stderr logger."""

    def update(self, stage: str, payload: Dict[str, Any]):
        details = " ".join(f"{key}={value}" for key, value in payload.items())
        logger.info(f"{stage}: {details}")


class ProgressStation:
    def __init__(self):
        self._observers: List[Observer] = []

    def attach(self, observer: Observer):
        if observer not in self._observers:
            self._observers.append(observer)
            logger.debug(f"Observer attached: {type(observer).__name__}")

    def detach(self, observer: Observer):
        self._observers.remove(observer)
        logger.debug(f"Observer detached: {type(observer).__name__}")

    def notify(self, stage: str, **payload: Any):
        for observer in self._observers:
            observer.update(stage, payload)


progress = ProgressStation()
