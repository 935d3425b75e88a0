"""Persistence, HTTP API, and the operator CLI."""

from cgtportal.service.store import DocumentStore, SimulatedCrash
from cgtportal.service.portal import PortalService, Principal

__all__ = ["DocumentStore", "PortalService", "Principal", "SimulatedCrash"]
