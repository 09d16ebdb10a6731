from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional
from datetime import datetime, timezone

from app.core.config import Settings, settings

class BaseGeometryService(ABC):
    """
    Abstract base class for all geometry services
    """

    def __init__(self, service_name: str, config: Optional[Settings] = None):
        self.service_name = service_name
        self.config = config or settings

    @abstractmethod
    def capabilities(self) -> List[str]:
        """
        Operations offered by the service
        """
        pass

    def health_check(self) -> Dict[str, Any]:
        """
        Perform health check for the service
        """
        return {
            "service": self.service_name,
            "status": "healthy",
            "capabilities": self.capabilities(),
            "last_check": self._get_timestamp(),
        }

    def _get_timestamp(self) -> str:
        """
        Get current timestamp
        """
        return datetime.now(timezone.utc).isoformat()

    def get_service_name(self) -> str:
        """
        Get the service name
        """
        return self.service_name
