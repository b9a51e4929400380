"""Configuration parsing, file formats and measured-data comparison.

Boundary units are GHz, mm and degrees; everything past this module is SI.
"""
from __future__ import annotations

import csv
import json
import math
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from .actuation import M16_PITCH, ScrewSpec, Setting
from .design import DesignResult
from .errors import ConfigError
from .phase import PhaseSweep
from .physics import FrequencyBand, WaveguideSpec
from .quadrature import METHODS, QuadratureSpec
from .tmm import TwoPortS, magnitude_db

GHZ = 1e9
MM = 1e-3
CSV_DIGITS = 12
TOUCHSTONE_DIGITS = 9
TRACE_KINDS = ("phase", "s11_db", "s21_db")


# --------------------------------------------------------------------------
# configuration

@dataclass(frozen=True)
class ToolConfig:
    guide: WaveguideSpec
    a_e: float
    screw: ScrewSpec
    quadrature: QuadratureSpec
    n_sections: int = 512
    output_dir: Path = Path(".")


_SCHEMA = {
    "guide": {"broad_wall_width_mm": None, "band_ghz": {"f_low": None, "f_high": None}},
    "a_e_mm": None,
    "screw": {"pitch_mm": None, "max_turns": None},
    "quadrature": {"method": None, "abs_tolerance_rad": None, "max_subdivisions": None},
    "n_sections": None,
    "output_dir": None,
}
_REQUIRED = {"guide", "guide.broad_wall_width_mm", "guide.band_ghz",
             "guide.band_ghz.f_low", "guide.band_ghz.f_high", "a_e_mm"}


def _check_keys(doc, schema, prefix=""):
    if not isinstance(doc, dict):
        raise ConfigError("expected an object", prefix or "<root>")
    for key in doc:
        path = f"{prefix}.{key}" if prefix else key
        if key not in schema:
            raise ConfigError("unknown key", path)
        if isinstance(schema[key], dict):
            _check_keys(doc[key], schema[key], path)
    for key, sub in schema.items():
        path = f"{prefix}.{key}" if prefix else key
        if path in _REQUIRED and key not in doc:
            raise ConfigError("missing required key", path)


def _number(doc, path, default=None, integer=False):
    node = doc
    for part in path.split("."):
        if not isinstance(node, dict) or part not in node:
            return default
        node = node[part]
    ok = isinstance(node, int) if integer else isinstance(node, (int, float))
    if isinstance(node, bool) or not ok or not math.isfinite(node):
        kind = "an integer" if integer else "a finite number"
        raise ConfigError(f"expected {kind}, got {node!r}", path)
    return node


def _invariant(condition, text):
    if not condition:
        raise ConfigError(f"invariant violated: {text}")


def parse_config(text: str) -> ToolConfig:
    """Validate a JSON configuration document and apply defaults.

    Defaults: M1.6 screw pitch (0.35 mm) with travel limited by cutoff at the
    band's lower edge, adaptive Simpson at 1e-6 rad over 20 levels,
    512 sections, output to the working directory.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"not valid JSON: {exc}") from exc
    _check_keys(doc, _SCHEMA)

    width = _number(doc, "guide.broad_wall_width_mm") * MM
    f_low = _number(doc, "guide.band_ghz.f_low") * GHZ
    f_high = _number(doc, "guide.band_ghz.f_high") * GHZ
    if not 0 < f_low < f_high:
        raise ConfigError("requires 0 < f_low < f_high", "guide.band_ghz")
    a_e = _number(doc, "a_e_mm") * MM
    pitch = _number(doc, "screw.pitch_mm", M16_PITCH / MM) * MM
    max_turns = _number(doc, "screw.max_turns")
    method = doc.get("quadrature", {}).get("method", "adaptive-simpson")
    if method not in METHODS:
        raise ConfigError(f"must be one of {list(METHODS)}", "quadrature.method")
    tol = _number(doc, "quadrature.abs_tolerance_rad", 1e-6)
    levels = _number(doc, "quadrature.max_subdivisions", 20, integer=True)
    n_sections = _number(doc, "n_sections", 512, integer=True)
    output_dir = doc.get("output_dir", ".")
    if not isinstance(output_dir, str):
        raise ConfigError("expected a string", "output_dir")

    _invariant(width > 0, "broad_wall_width > 0")
    _invariant(a_e > 0, "a_e > 0")
    _invariant(pitch > 0, "pitch > 0")
    _invariant(max_turns is None or max_turns > 0, "max_turns > 0")
    _invariant(tol > 0, "abs_tolerance > 0")
    _invariant(levels >= 8, "max_subdivisions >= 8")
    _invariant(n_sections >= 1, "n_sections >= 1")
    try:
        guide = WaveguideSpec(width, FrequencyBand(f_low, f_high))
        screw = (ScrewSpec(pitch, max_turns) if max_turns is not None
                 else ScrewSpec.for_guide(guide, pitch))
    except ValueError as exc:
        raise ConfigError(f"invariant violated: {exc}") from exc
    return ToolConfig(guide, a_e, screw, QuadratureSpec(method, tol, levels),
                      n_sections, Path(output_dir))


def default_config() -> ToolConfig:
    """WR15 host, 64-75 GHz band, 11 mm half-length strip."""
    return parse_config(json.dumps({
        "guide": {"broad_wall_width_mm": 3.76, "band_ghz": {"f_low": 64, "f_high": 75}},
        "a_e_mm": 11,
    }))


# --------------------------------------------------------------------------
# CSV tables

def _fmt(value, digits=CSV_DIGITS):
    # + 0.0 folds negative zero
    return format(float(value) + 0.0, f".{digits}g")


def _write_rows(path_or_file, header, rows):
    if hasattr(path_or_file, "write"):
        writer = csv.writer(path_or_file, lineterminator="\n")
        writer.writerow(header)
        writer.writerows([_fmt(v) for v in row] for row in rows)
        return
    with open(path_or_file, "w", newline="") as fh:
        _write_rows(fh, header, rows)


def _read_rows(path, header):
    rows = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        first = next(reader, None)
        if first is None or [h.strip() for h in first] != list(header):
            raise ValueError(f"{path}: line 1: expected header {','.join(header)}")
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(header):
                raise ValueError(
                    f"{path}: line {lineno}: expected {len(header)} columns, got {len(row)}")
            try:
                rows.append([float(cell) for cell in row])
            except ValueError:
                raise ValueError(f"{path}: line {lineno}: non-numeric value in {row!r}") from None
    return rows


def write_phase_sweep_csv(sweep: PhaseSweep, path) -> None:
    rows = [(f / GHZ, b / MM, sweep.phase_shift_deg[i, j])
            for i, b in enumerate(sweep.deflections)
            for j, f in enumerate(sweep.frequencies)]
    _write_rows(path, ("freq_ghz", "be_mm", "phase_deg"), rows)


def read_phase_sweep_csv(path) -> PhaseSweep:
    rows = np.array(_read_rows(path, ("freq_ghz", "be_mm", "phase_deg")))
    freqs = np.unique(rows[:, 0])
    defl = np.unique(rows[:, 1])
    table = np.full((defl.size, freqs.size), np.nan)
    table[np.searchsorted(defl, rows[:, 1]), np.searchsorted(freqs, rows[:, 0])] = rows[:, 2]
    if np.isnan(table).any():
        raise ValueError(f"{path}: sweep table is not a full grid")
    return PhaseSweep(freqs * GHZ, defl * MM, table)


def write_calibration_csv(table: list[Setting], path) -> None:
    rows = [(s.turns, s.b_e / MM, s.phase_shift_deg) for s in table]
    _write_rows(path, ("turns", "be_mm", "phase_deg"), rows)


def read_calibration_csv(path, frequency: float = float("nan")) -> list[Setting]:
    return [Setting(t, b * MM, p, frequency)
            for t, b, p in _read_rows(path, ("turns", "be_mm", "phase_deg"))]


# --------------------------------------------------------------------------
# Touchstone

def touchstone_text(sweep) -> str:
    """Two-port Touchstone v1, real/imaginary, frequencies in GHz.

    The option line declares R 1: the data are normalised to the TE10 wave
    impedance of the port guide, not to a fixed resistance.
    """
    if not sweep:
        raise ValueError("cannot write an empty sweep")
    freqs = [f for f, _ in sweep]
    if any(b <= a for a, b in zip(freqs, freqs[1:])):
        raise ValueError("sweep frequencies must be strictly ascending")
    lines = ["! S-parameters normalised to the TE10 wave impedance of the port waveguide",
             "# GHz S RI R 1"]
    for f, s in sweep:
        vals = [f / GHZ]
        for z in (s.s11, s.s21, s.s12, s.s22):
            vals += [z.real, z.imag]
        lines.append(" ".join(_fmt(v, TOUCHSTONE_DIGITS) for v in vals))
    return "\n".join(lines) + "\n"


def write_touchstone(sweep, path) -> None:
    Path(path).write_text(touchstone_text(sweep))


_FREQ_SCALE = {"HZ": 1.0, "KHZ": 1e3, "MHZ": 1e6, "GHZ": 1e9}


def read_touchstone(path):
    """Parse a two-port RI/MA/DB Touchstone v1 file into [(f_hz, TwoPortS), ...]."""
    scale, fmt = GHZ, "MA"
    tokens = []
    for raw in Path(path).read_text().splitlines():
        line = raw.split("!", 1)[0].strip()
        if not line:
            continue
        if line.startswith("#"):
            for opt in line[1:].upper().split():
                if opt in _FREQ_SCALE:
                    scale = _FREQ_SCALE[opt]
                elif opt in ("RI", "MA", "DB"):
                    fmt = opt
            continue
        tokens.extend(float(t) for t in line.split())
    if len(tokens) % 9:
        raise ValueError(f"{path}: data length {len(tokens)} is not a multiple of 9")
    out = []
    for row in np.reshape(tokens, (-1, 9)):
        vals = []
        for x, y in row[1:].reshape(4, 2):
            if fmt == "RI":
                vals.append(complex(x, y))
            else:
                mag = 10 ** (x / 20) if fmt == "DB" else x
                vals.append(mag * complex(math.cos(math.radians(y)), math.sin(math.radians(y))))
        # file order is S11 S21 S12 S22
        out.append((row[0] * scale, TwoPortS(*vals)))
    return out


# --------------------------------------------------------------------------
# traces and comparison

@dataclass(frozen=True)
class MeasuredTrace:
    """Frequency series, frequencies in Hz, values in degrees or dB."""

    frequencies: np.ndarray
    values: np.ndarray
    kind: str

    def __post_init__(self):
        if self.kind not in TRACE_KINDS:
            raise ValueError(f"kind must be one of {TRACE_KINDS}")
        f = np.asarray(self.frequencies, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if f.shape != v.shape or f.ndim != 1 or f.size == 0:
            raise ValueError("frequencies and values must be equal-length 1-D arrays")
        if np.any(np.diff(f) <= 0):
            raise ValueError("frequencies must be strictly increasing")
        if not (np.all(np.isfinite(f)) and np.all(np.isfinite(v))):
            raise ValueError("trace has missing values")
        object.__setattr__(self, "frequencies", f)
        object.__setattr__(self, "values", v)


def read_measured_csv(path, kind: str) -> MeasuredTrace:
    rows = np.array(_read_rows(path, ("freq_ghz", "value")))
    if rows.size == 0:
        raise ValueError(f"{path}: no data rows")
    return MeasuredTrace(rows[:, 0] * GHZ, rows[:, 1], kind)


def trace_from_sweep(sweep: PhaseSweep, b_e: float) -> MeasuredTrace:
    return MeasuredTrace(sweep.frequencies, sweep.row(b_e), "phase")


def trace_from_sparams(sweep, kind: str) -> MeasuredTrace:
    attr = {"s11_db": "s11", "s21_db": "s21"}.get(kind)
    if attr is None:
        raise ValueError(f"S-parameter traces are s11_db or s21_db, not {kind!r}")
    freqs = np.array([f for f, _ in sweep])
    return MeasuredTrace(freqs, magnitude_db([getattr(s, attr) for _, s in sweep]), kind)


@dataclass(frozen=True)
class ComparisonReport:
    kind: str
    mean_error: float
    rms_error: float
    max_abs_error: float
    frequencies_ghz: list
    residuals: list

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)


def compare_measured(model: MeasuredTrace, measured: MeasuredTrace) -> ComparisonReport:
    """Residuals measured - model, with the model linearly interpolated onto the
    measured frequencies. Measured points outside the model's range are dropped."""
    if model.kind != measured.kind:
        raise ValueError(f"kind mismatch: model {model.kind!r} vs measured {measured.kind!r}")
    lo, hi = model.frequencies[0], model.frequencies[-1]
    inside = (measured.frequencies >= lo) & (measured.frequencies <= hi)
    if not inside.any():
        raise ValueError("model and measured frequency ranges do not overlap")
    f = measured.frequencies[inside]
    resid = measured.values[inside] - np.interp(f, model.frequencies, model.values)
    return ComparisonReport(
        kind=measured.kind,
        mean_error=float(np.mean(resid)),
        rms_error=float(np.sqrt(np.mean(resid ** 2))),
        max_abs_error=float(np.max(np.abs(resid))),
        frequencies_ghz=[float(x) for x in f / GHZ],
        residuals=[float(r) for r in resid],
    )


def design_result_json(result: DesignResult) -> str:
    return json.dumps({
        "feasible": result.feasible,
        "a_e_mm": result.a_e / MM,
        "length_mm": 2 * result.a_e / MM,
        "b_e_max_mm": result.b_e_max / MM,
        "achieved_phase_deg": result.achieved_phase,
        "dispersion": result.dispersion,
    }, indent=2)
