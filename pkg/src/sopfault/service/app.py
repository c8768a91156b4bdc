"""FastAPI application exposing the pipeline.

Every endpoint is a POST taking one request model and returning one
response model; domain errors map to HTTP 400 with {"error", "detail"}.
"""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import SopFaultError
from . import handlers, schemas


def create_app() -> FastAPI:
    app = FastAPI(title="sopfault", version=__version__)

    @app.exception_handler(SopFaultError)
    async def domain_error(request: Request, exc: SopFaultError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"error": type(exc).__name__, "detail": str(exc)},
        )

    @app.get("/health", response_model=schemas.HealthResponse)
    def health() -> schemas.HealthResponse:
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.post(
        "/faults",
        response_model=schemas.FaultsResponse,
        responses={400: {"model": schemas.ErrorResponse}},
    )
    def faults(req: schemas.CircuitRequest) -> schemas.FaultsResponse:
        return handlers.handle_faults(req)

    @app.post(
        "/dict",
        response_model=schemas.DictResponse,
        responses={400: {"model": schemas.ErrorResponse}},
    )
    def dictionary(req: schemas.DictRequest) -> schemas.DictResponse:
        return handlers.handle_dict(req)

    @app.post(
        "/minimize",
        response_model=schemas.MinimizeResponse,
        responses={400: {"model": schemas.ErrorResponse}},
    )
    def minimize(req: schemas.MinimizeRequest) -> schemas.MinimizeResponse:
        return handlers.handle_minimize(req)

    @app.post(
        "/tree",
        response_model=schemas.TreeResponse,
        responses={400: {"model": schemas.ErrorResponse}},
    )
    def tree(req: schemas.TreeRequest) -> schemas.TreeResponse:
        return handlers.handle_tree(req)

    @app.post(
        "/simulate",
        response_model=schemas.SimulateResponse,
        responses={400: {"model": schemas.ErrorResponse}},
    )
    def simulate(req: schemas.SimulateRequest) -> schemas.SimulateResponse:
        return handlers.handle_simulate(req)

    @app.post(
        "/verify",
        response_model=schemas.VerifyResponse,
        responses={400: {"model": schemas.ErrorResponse}},
    )
    def verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
        return handlers.handle_verify(req)

    @app.post(
        "/gen",
        response_model=schemas.GenResponse,
        responses={400: {"model": schemas.ErrorResponse}},
    )
    def gen(req: schemas.GenRequest) -> schemas.GenResponse:
        return handlers.handle_gen(req)

    @app.post(
        "/bench",
        response_model=schemas.BenchResponse,
        responses={400: {"model": schemas.ErrorResponse}},
    )
    def bench(req: schemas.BenchRequest) -> schemas.BenchResponse:
        return handlers.handle_bench(req)

    return app
