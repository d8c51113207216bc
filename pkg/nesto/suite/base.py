import itertools
import logging
import queue
import threading
import time
from abc import ABC, abstractmethod
from enum import IntEnum
from typing import Any, Optional

from ..counting.report import IdentityReport
from ..errors import NestoError


class Priority(IntEnum):
    LOW = 3
    NORMAL = 2
    HIGH = 1
    CRITICAL = 0


class CheckEvent:
    def __init__(self, event_type: str, payload: Any, priority: Priority = Priority.NORMAL, seq: int = 0):
        self.event_type = event_type
        self.payload = payload
        self.priority = priority
        self.seq = seq

    def __lt__(self, other):
        return (self.priority, self.seq) < (other.priority, other.seq)


class SuiteBase(ABC):
    """Runs queued checks on worker threads and collects one result per event.

    Every dispatched event is kept; results come back in dispatch order whatever
    order the workers finish in.
    """

    def __init__(self, name: str, workers: int = 1):
        self.name = name
        self.workers = max(1, workers)
        self._queue: queue.PriorityQueue[CheckEvent] = queue.PriorityQueue()
        self._results: list[tuple[int, dict]] = []
        self._results_lock = threading.Lock()
        self._counter = itertools.count()
        self._worker_threads: list[threading.Thread] = []
        self._running = threading.Event()
        self.logger = logging.getLogger(f"suite.{name}")

    def dispatch(self, event_type: str, payload: Any, priority: Priority = Priority.NORMAL):
        if not self._running.is_set():
            self.logger.warning(f"Suite {self.name} is not running, ignoring event {event_type}")
            return

        event = CheckEvent(event_type, payload, priority, next(self._counter))
        self._queue.put(event)
        self.logger.debug(f"Dispatched event {event_type} with priority {priority.name}")

    def start(self):
        if self._running.is_set():
            self.logger.warning(f"Suite {self.name} is already running")
            return

        self._running.set()
        self._worker_threads = [
            threading.Thread(target=self._event_loop, daemon=True, name=f"{self.name}-{k}")
            for k in range(self.workers)
        ]
        for thread in self._worker_threads:
            thread.start()
        self.logger.info(f"Suite {self.name} started with {self.workers} worker(s)")

    def stop(self, timeout: float = 5.0):
        if not self._running.is_set():
            self.logger.warning(f"Suite {self.name} is not running")
            return

        self.logger.info(f"Stopping suite {self.name}")
        self._running.clear()
        for thread in self._worker_threads:
            thread.join(timeout=timeout)
            if thread.is_alive():
                self.logger.warning(f"Suite {self.name} worker {thread.name} did not stop within timeout")

    def _event_loop(self):
        while self._running.is_set():
            try:
                event = self._queue.get(timeout=0.1)
            except queue.Empty:
                continue

            started = time.perf_counter()
            try:
                outcome = self.handle_event(event.event_type, event.payload)
                result = self._result(event, outcome)
            except NestoError as e:
                self.logger.info(f"Check {event.event_type} raised {e.code}: {e}")
                result = self._failure(event, e.to_dict())
            except Exception as e:
                self.logger.error(f"Error handling event {event.event_type}: {e}")
                result = self._failure(event, {"error": type(e).__name__, "message": str(e)})
            self.logger.debug(f"{event.event_type} finished in {time.perf_counter() - started:.3f}s")

            # stored before task_done: wait_until_idle reads unfinished_tasks
            with self._results_lock:
                self._results.append((event.seq, result))
            self._queue.task_done()

    def _result(self, event: CheckEvent, outcome: Any) -> dict:
        if isinstance(outcome, IdentityReport):
            return {"check": event.event_type, "subject": outcome.subject, "ok": outcome.ok, "report": outcome.to_json()}
        if isinstance(outcome, dict):
            return {"check": event.event_type, "ok": bool(outcome.get("ok", True)), **outcome}
        return {"check": event.event_type, "ok": bool(outcome)}

    def _failure(self, event: CheckEvent, error: dict) -> dict:
        return {"check": event.event_type, "subject": _subject(event.payload), "ok": False, "error": error}

    @abstractmethod
    def handle_event(self, event_type: str, payload: Any) -> Any:
        pass

    @abstractmethod
    def plan(self, max_n: int, seed: int) -> list[tuple[str, Any]]:
        """The (event_type, payload) checks this suite runs up to ground size max_n."""

    @property
    def is_running(self) -> bool:
        return self._running.is_set()

    @property
    def has_pending_event(self) -> bool:
        return self._queue.unfinished_tasks > 0

    def wait_until_idle(self, timeout: Optional[float] = None) -> bool:
        """Wait until no pending events. Returns True if idle, False if timeout."""
        start_time = time.time()
        while self.has_pending_event:
            if timeout is not None and time.time() - start_time > timeout:
                return False
            time.sleep(0.01)
        return True

    def results(self) -> list[dict]:
        with self._results_lock:
            return [result for _, result in sorted(self._results, key=lambda r: r[0])]

    def run(self, max_n: int, seed: int, timeout: Optional[float] = None) -> list[dict]:
        self.start()
        try:
            for event_type, payload in self.plan(max_n, seed):
                self.dispatch(event_type, payload)
            if not self.wait_until_idle(timeout):
                self.logger.warning(f"Suite {self.name} timed out with checks still queued")
        finally:
            self.stop()
        return self.results()


def _subject(payload: Any) -> str:
    label = getattr(payload, "label", None)
    if callable(label):
        return label()
    return str(payload)
