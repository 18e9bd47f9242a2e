from pathlib import Path

import pytest

from evfuse.evidence import Frame, bpa_new
from evfuse.pipeline import SensorReport

REPO_ROOT = Path(__file__).resolve().parents[1]
SCENARIO_DIR = REPO_ROOT / "scenarios"

# The worked five-radar target-recognition example used throughout the suite:
# (source_id, masses, direct reliability).
FIVE_REPORT_DATA = [
    ("radar-1", {("A",): 0.6, ("B",): 0.15, ("A", "C"): 0.25}, 0.55),
    ("radar-2", {("A",): 0.5, ("B",): 0.3, ("C",): 0.2}, 0.6),
    ("radar-3", {("B",): 0.95, ("C",): 0.05}, 0.25),
    ("radar-4", {("A",): 0.55, ("B",): 0.25, ("A", "C"): 0.2}, 0.45),
    ("radar-5", {("A",): 0.6, ("B",): 0.3, ("B", "C"): 0.1}, 0.5),
]


@pytest.fixture
def frame_abc():
    return Frame(("A", "B", "C"))


@pytest.fixture
def five_reports(frame_abc):
    return [
        SensorReport(sid, bpa_new(frame_abc, list(masses.items())), reliability=mu)
        for sid, masses, mu in FIVE_REPORT_DATA
    ]


@pytest.fixture
def five_bpas(five_reports):
    return [r.bpa for r in five_reports]


@pytest.fixture
def five_radar_scenario_path():
    return SCENARIO_DIR / "five_radar_recognition.json"


@pytest.fixture
def curve_scenario_path():
    return SCENARIO_DIR / "curve_derived.json"
