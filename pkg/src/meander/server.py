"""HTTP JSON service: GET /presets, POST /analyze, POST /portrait, GET /healthz.

Stateless per request; bodies are UTF-8 JSON.  Invalid coefficients (n < 4,
list lengths not matching s) are rejected with 422 by validation.
"""

from __future__ import annotations

from fastapi import FastAPI
from pydantic import BaseModel, Field, model_validator

from .field import ModelParams
from .patterns import PortraitOptions, build_portrait, classify_patterns
from .portrait_io import RenderStyle, portrait_document, to_svg
from .reports import analyze_params
from . import presets

app = FastAPI(title="meander", version="0.1.0")


class ParamsModel(BaseModel):
    n: int = Field(ge=4)
    eps1: float = 0.0
    eps2: float = 0.0
    a1: list[float] | None = None
    a2: list[float] | None = None
    b1: float = 0.0
    b2: float = 0.0

    @model_validator(mode="after")
    def _check_lengths(self):
        s = self.n // 2 - 1
        if self.a1 is None:
            self.a1 = [0.0] * s
        if self.a2 is None:
            self.a2 = [0.0] * s
        if len(self.a1) != s or len(self.a2) != s:
            raise ValueError(f"coefficient lists must have exactly s={s} entries for n={self.n}")
        return self

    def to_params(self) -> ModelParams:
        return ModelParams(n=self.n, eps1=self.eps1, eps2=self.eps2,
                           a1=tuple(self.a1), a2=tuple(self.a2),
                           b1=self.b1, b2=self.b2)


class CensusModel(BaseModel):
    r0: float = Field(gt=0)
    count: int = Field(ge=1, le=2000)


class PortraitRequest(BaseModel):
    params: ParamsModel
    window: float | None = Field(default=None, gt=0)
    seed_count: int = Field(default=3, ge=0, le=20)
    max_points: int = Field(default=4000, ge=16, le=20000)
    census: CensusModel | None = None
    format: str = Field(default="json", pattern="^(json|svg)$")


class AnalyzeRequest(BaseModel):
    params: ParamsModel


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok"}


@app.get("/presets")
def list_presets() -> list[dict]:
    out = []
    for name in presets.names():
        pr = presets.get(name)
        p = pr.params
        out.append({
            "name": pr.name,
            "note": pr.note,
            "window": pr.window,
            "params": {"n": p.n, "eps1": p.eps1, "eps2": p.eps2,
                       "a1": list(p.a1), "a2": list(p.a2),
                       "b1": p.b1, "b2": p.b2},
        })
    return out


@app.post("/analyze")
def analyze(req: AnalyzeRequest) -> dict:
    return analyze_params(req.params.to_params())


@app.post("/portrait")
def portrait(req: PortraitRequest):
    p = req.params.to_params()
    census = (req.census.r0, req.census.count) if req.census else None
    pt = build_portrait(p, PortraitOptions(seed_count=req.seed_count, census=census))
    report = None if pt.degenerate else classify_patterns(pt)
    if req.format == "svg":
        from fastapi.responses import Response
        return Response(content=to_svg(pt, RenderStyle(window=req.window)),
                        media_type="image/svg+xml")
    return portrait_document(pt, report, req.max_points)
