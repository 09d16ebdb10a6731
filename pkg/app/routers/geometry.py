from typing import Any, Callable, Dict

from fastapi import APIRouter, HTTPException, status
from starlette.concurrency import run_in_threadpool

from app.core.exceptions import GeometryError
from app.schemas.requests import (
    DistRequest,
    GeodesicRequest,
    ProbRequest,
    ProjectRequest,
    SeqProbRequest,
    VerifyRequest,
)
from app.schemas.responses import ServiceResponse
from app.services.service_factory import ServiceFactory

router = APIRouter(tags=["geometry"])

async def _respond(run: Callable[[], Dict[str, Any]], message: str) -> ServiceResponse:
    """
    Execute a command off the event loop, mapping domain errors to their HTTP status
    """
    try:
        data = await run_in_threadpool(run)
    except GeometryError as e:
        raise HTTPException(status_code=e.status_code, detail=e.to_detail())
    except Exception as e:
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail=f"Error processing request: {str(e)}"
        )
    return ServiceResponse(success=True, message=message, data=data)

@router.post("/dist", response_model=ServiceResponse)
async def dist(request: DistRequest):
    """
    Fubini-Study distance to a state or to the subspace of an event
    """
    service = ServiceFactory.get_service("command")
    target = request.other if request.other is not None else request.event
    return await _respond(lambda: service.dist(request.state, target, request.tol_report), "Distance computed")

@router.post("/prob", response_model=ServiceResponse)
async def prob(request: ProbRequest):
    """
    Single-event probability, geometric and operator values side by side
    """
    service = ServiceFactory.get_service("command")
    return await _respond(lambda: service.prob(request.state, request.event, request.tol_report), "Probability computed")

@router.post("/seq-prob", response_model=ServiceResponse)
async def seq_prob(request: SeqProbRequest):
    service = ServiceFactory.get_service("command")
    return await _respond(
        lambda: service.seq_prob(request.state, request.events, request.tol_report),
        "Consecutive probability computed"
    )

@router.post("/project", response_model=ServiceResponse)
async def project(request: ProjectRequest):
    service = ServiceFactory.get_service("command")
    return await _respond(lambda: service.project(request.state, request.event, request.tol_report), "Projection computed")

@router.post("/geodesic", response_model=ServiceResponse)
async def geodesic(request: GeodesicRequest):
    service = ServiceFactory.get_service("command")
    return await _respond(
        lambda: service.geodesic(request.start, request.end, request.steps, request.tol_report),
        "Geodesic computed"
    )

@router.post("/verify", response_model=ServiceResponse)
async def verify(request: VerifyRequest):
    """
    Run the seeded verification suites; ``data.passed`` carries the verdict
    """
    service = ServiceFactory.get_service("command")
    return await _respond(
        lambda: service.verify(
            seed=request.seed,
            dims=request.dims,
            trials=request.trials,
            max_chain=request.max_chain,
            suite=request.suite,
            workers=request.workers,
            tol_report=request.tol_report,
        ),
        "Verification finished"
    )

@router.get("/health")
async def health_check():
    """
    Health check for every geometry service
    """
    return {
        "status": "healthy",
        "services": [
            ServiceFactory.get_service(name).health_check()
            for name in ServiceFactory.get_available_services()
        ],
    }

@router.get("/info")
async def get_service_info():
    """
    Get information about the geometry API
    """
    command = ServiceFactory.get_service("command")
    return {
        "service_name": "geometry",
        "description": command.config.DESCRIPTION,
        "version": command.config.VERSION,
        "capabilities": command.capabilities(),
        "tolerances": command.config.tolerances(),
    }
