"""
Coxeter FC Analyzer - Main FastAPI Application
"""
from contextlib import asynccontextmanager

import structlog
from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from app.config import get_settings
from app.exceptions import CoxeterError, ResourceLimitError
from app.log import configure_logging
from app.routers import analysis
from app.schemas import HealthResponse

settings = get_settings()
logger = structlog.get_logger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Application lifespan events"""
    configure_logging(settings)
    logger.info("startup", app=settings.app_name, max_length=settings.max_length, element_cap=settings.element_cap)
    yield
    logger.info("shutdown", app=settings.app_name)


app = FastAPI(
    title=settings.app_name,
    description="Finite continuation of simple reflections in Coxeter groups",
    version="1.0.0",
    lifespan=lifespan,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.exception_handler(ResourceLimitError)
async def resource_limit_handler(request: Request, exc: ResourceLimitError):
    logger.warning("resource_limit", path=request.url.path, error=str(exc))
    return JSONResponse(status_code=413, content={"detail": str(exc)})


@app.exception_handler(CoxeterError)
async def coxeter_error_handler(request: Request, exc: CoxeterError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


app.include_router(analysis.router, prefix="/api", tags=["Analysis"])


@app.get("/health", response_model=HealthResponse, tags=["Health"])
async def health_check():
    """Health check endpoint"""
    return {"status": "healthy"}
