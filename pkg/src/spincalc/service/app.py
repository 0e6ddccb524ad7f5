"""FastAPI service wrapping the spin-calculus package.

The CLI is a thin client of this app; by default it mounts the app
in-process, so identical requests produce identical JSON with or
without a running server.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import engine, graphs, spin, systems, veech
from ..modring import SpinError
from . import models


def create_app():
    app = FastAPI(title="spincalc", version="0.1.0")

    @app.exception_handler(SpinError)
    async def spin_error_handler(request, exc):
        from fastapi.responses import JSONResponse

        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.get("/health", response_model=models.HealthResponse)
    def health():
        return models.HealthResponse()

    @app.get("/presets", response_model=models.PresetListResponse)
    def presets():
        rows = [models.PresetRow(**row) for row in systems.preset_table()]
        return models.PresetListResponse(presets=rows)

    @app.post("/enumerate", response_model=models.EnumerateResponse)
    def enumerate_structures(req: models.EnumerateRequest):
        hist = spin.parity_histogram(req.genus, req.r)
        return models.EnumerateResponse(genus=req.genus, r=req.r, **hist)

    @app.post("/verify/main2", response_model=models.VerificationResponse,
              response_model_by_alias=True)
    def verify_main2(req: models.VerifyMain2Request):
        report = engine.verify_main2(req.genus, req.parity)
        return models.VerificationResponse(**report.to_json_dict())

    @app.post("/verify/main3", response_model=models.VerificationResponse,
              response_model_by_alias=True)
    def verify_main3(req: models.VerifyMain3Request):
        report = engine.verify_main3()
        return models.VerificationResponse(**report.to_json_dict())

    @app.post("/origami", response_model=models.OrigamiResponse)
    def origami(req: models.OrigamiRequest):
        system = systems.preset(req.preset, req.genus)
        o = system.origami
        parity = None
        parity_error = None
        try:
            parity = veech.spin_parity(o).value
        except SpinError as exc:
            parity_error = str(exc)
        return models.OrigamiResponse(
            preset=system.name,
            genus=system.genus,
            origami=models.OrigamiData(**o.to_json_dict()),
            stratum=list(o.stratum()),
            spin_parity=parity,
            spin_parity_error=parity_error,
        )

    @app.post("/graph", response_model=models.GraphResponse,
              response_model_by_alias=True)
    def graph(req: models.GraphRequest):
        r = 4 if req.kind == "CG2plus" else 2
        phi = graphs.canonical_structure(req.genus, r, req.parity)
        kwargs = {}
        if req.max_vertices is not None:
            kwargs["max_vertices"] = req.max_vertices
        shadow = graphs.build_shadow(req.kind, req.genus, phi, **kwargs)
        report = graphs.component_report(shadow)
        dot = None
        if req.dot:
            dot = graphs.export_dot(shadow)
        return models.GraphResponse(**report, dot=dot)

    return app


app = create_app()
