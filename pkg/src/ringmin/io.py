"""File formats: JSON for series, surfaces and Cauchy data; atomic writes.

All documents carry a "format": 1 field.  Fixed field names:

    FourierSeries      [{"n": int, "re": float, "im": float}, ...]
    AnnularHarmonic    {"c": [re, im], "d": [re, im],
                        "pairs": [{"n": n, "a": [re, im], "b": [re, im]}]}
    Cauchy data        {"format": 1, "h0": <series>, "w0": <series>,
                        "nu0": <series>}
                       or the sampled form
                       {"format": 1, "samples": M, "h0": [[re, im] x M],
                        "w0": [float x M], "gauss": [[xi_re, xi_im, tau] x M]}
                       with exactly one of "nu0"/"gauss" present
    Surface            {"format": 1, "h": ..., "w": ..., "annulus": [r, R],
                        "report": {"annulus": [r, R], "residual_max": f,
                                   "w_crosscheck": f, "decay_rate": f}}

JSON floats round-trip exactly (repr), so re-reading a solve output and
recomputing its residuals reproduces identical numbers.
"""
from __future__ import annotations

import json
import os
import tempfile

import numpy as np

from .bjorling import BjorlingData, SolveReport
from .errors import DataError
from .series import AnnularHarmonic, Annulus, FourierSeries, analyze
from .surface import GaussVector, MinimalSurface


def atomic_write_text(path, text: str) -> None:
    """Write via a sibling temp file and rename, so outputs appear whole."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# -- series ----------------------------------------------------------------------


def fourier_to_json(p: FourierSeries) -> list:
    return [
        {"n": n, "re": float(c.real), "im": float(c.imag)}
        for n, c in sorted(p.coeffs.items())
    ]


def fourier_from_json(items) -> FourierSeries:
    coeffs = {}
    for item in items:
        coeffs[int(item["n"])] = complex(float(item["re"]), float(item["im"]))
    return FourierSeries.from_coeffs(coeffs)


def harmonic_to_json(h: AnnularHarmonic) -> dict:
    return {
        "c": [float(h.log_coeff.real), float(h.log_coeff.imag)],
        "d": [float(h.constant.real), float(h.constant.imag)],
        "pairs": [
            {
                "n": n,
                "a": [float(a.real), float(a.imag)],
                "b": [float(b.real), float(b.imag)],
            }
            for n, (a, b) in sorted(h.pairs.items())
        ],
    }


def harmonic_from_json(doc) -> AnnularHarmonic:
    pairs = {}
    for item in doc.get("pairs", []):
        pairs[int(item["n"])] = (
            complex(item["a"][0], item["a"][1]),
            complex(item["b"][0], item["b"][1]),
        )
    return AnnularHarmonic.from_terms(
        complex(doc["c"][0], doc["c"][1]), complex(doc["d"][0], doc["d"][1]), pairs
    )


# -- Cauchy data -------------------------------------------------------------------


def load_bjorling_data(path) -> BjorlingData:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DataError(f"cannot read Cauchy data file {path}: {exc}") from exc
    return bjorling_data_from_json(doc)


def bjorling_data_from_json(doc) -> BjorlingData:
    if doc.get("format") != 1:
        raise DataError("Cauchy data file must declare \"format\": 1")
    if ("nu0" in doc) == ("gauss" in doc):
        raise DataError("exactly one of \"nu0\" and \"gauss\" must be present")
    if "samples" in doc:
        m = int(doc["samples"])
        h0_samples = np.array([complex(p[0], p[1]) for p in doc["h0"]])
        w0_samples = np.array([float(x) for x in doc["w0"]], dtype=float)
        if len(h0_samples) != m or len(w0_samples) != m:
            raise DataError("sample arrays must have the declared length")
        h0 = analyze(h0_samples).prune(1e-13)
        w0 = analyze(w0_samples).symmetrized().prune(1e-13)
        if "gauss" in doc:
            if len(doc["gauss"]) != m:
                raise DataError("sample arrays must have the declared length")
            try:
                gauss = tuple(
                    GaussVector(complex(g[0], g[1]), float(g[2]))
                    for g in doc["gauss"]
                )
            except ValueError as exc:
                raise DataError(str(exc)) from exc
            return BjorlingData(h0=h0, w0=w0, gauss=gauss)
        return BjorlingData(h0=h0, w0=w0, nu0=fourier_from_json(doc["nu0"]))
    h0 = fourier_from_json(doc["h0"])
    w0 = fourier_from_json(doc["w0"])
    if "gauss" in doc:
        try:
            gauss = tuple(
                GaussVector(complex(g[0], g[1]), float(g[2])) for g in doc["gauss"]
            )
        except ValueError as exc:
            raise DataError(str(exc)) from exc
        return BjorlingData(h0=h0, w0=w0, gauss=gauss)
    return BjorlingData(h0=h0, w0=w0, nu0=fourier_from_json(doc["nu0"]))


def bjorling_data_to_json(data: BjorlingData) -> dict:
    doc = {
        "format": 1,
        "h0": fourier_to_json(data.h0),
        "w0": fourier_to_json(data.w0),
    }
    if data.nu0 is not None:
        doc["nu0"] = fourier_to_json(data.nu0)
    else:
        doc["gauss"] = [
            [float(g.xi.real), float(g.xi.imag), float(g.tau)] for g in data.gauss
        ]
    return doc


# -- surfaces ---------------------------------------------------------------------


def surface_to_json(surface: MinimalSurface, report: SolveReport | None = None) -> dict:
    doc = {
        "format": 1,
        "h": harmonic_to_json(surface.h),
        "w": harmonic_to_json(surface.w),
        "annulus": [surface.annulus.r, surface.annulus.R],
    }
    if surface.w_kind != "harmonic":
        doc["w_kind"] = surface.w_kind
        doc["w_sign"] = surface.w_sign
        doc["recorded_defect"] = surface.recorded_defect
    if report is not None:
        doc["report"] = report.as_dict()
    return doc


def surface_from_json(doc) -> tuple[MinimalSurface, SolveReport | None]:
    if doc.get("format") != 1:
        raise DataError("surface file must declare \"format\": 1")
    surface = MinimalSurface(
        harmonic_from_json(doc["h"]),
        harmonic_from_json(doc["w"]),
        Annulus(float(doc["annulus"][0]), float(doc["annulus"][1])),
        w_kind=doc.get("w_kind", "harmonic"),
        w_sign=int(doc.get("w_sign", 1)),
        recorded_defect=float(doc.get("recorded_defect", 0.0)),
    )
    report = None
    if "report" in doc:
        rep = doc["report"]
        report = SolveReport(
            annulus=(float(rep["annulus"][0]), float(rep["annulus"][1])),
            residual_max=float(rep["residual_max"]),
            w_crosscheck=float(rep["w_crosscheck"]),
            decay_rate=float(rep["decay_rate"]),
        )
    return surface, report


def dump_json(doc, path) -> None:
    atomic_write_text(path, json.dumps(doc, indent=1) + "\n")


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc
