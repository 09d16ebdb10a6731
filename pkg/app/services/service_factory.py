from typing import Dict, TYPE_CHECKING

if TYPE_CHECKING:
    from .base_service import BaseGeometryService

class ServiceFactory:
    """
    Factory pattern implementation for creating service instances
    """

    _services: Dict[str, "BaseGeometryService"] = {}

    @classmethod
    def get_service(cls, service_name: str) -> "BaseGeometryService":
        """
        Get or create a service instance based on service name
        """
        if service_name not in cls._services:
            cls._services[service_name] = cls._create_service(service_name)

        return cls._services[service_name]

    @classmethod
    def _create_service(cls, service_name: str) -> "BaseGeometryService":
        """
        Create a new service instance based on service name
        """
        # Import here to avoid circular imports
        if service_name == "hilbert":
            from .hilbert_service import HilbertService
            return HilbertService()
        elif service_name == "projective":
            from .projective_service import ProjectiveGeometryService
            return ProjectiveGeometryService(hilbert=cls.get_service("hilbert"))
        elif service_name == "probability":
            from .probability_service import ProbabilityService
            return ProbabilityService(
                hilbert=cls.get_service("hilbert"),
                geometry=cls.get_service("projective"),
            )
        elif service_name == "verification":
            from .verification_service import VerificationService
            return VerificationService(
                hilbert=cls.get_service("hilbert"),
                geometry=cls.get_service("projective"),
                probability=cls.get_service("probability"),
            )
        elif service_name == "command":
            from .command_service import CommandService
            return CommandService(
                hilbert=cls.get_service("hilbert"),
                geometry=cls.get_service("projective"),
                probability=cls.get_service("probability"),
                verification=cls.get_service("verification"),
            )
        else:
            raise ValueError(f"Unknown service: {service_name}")

    @classmethod
    def get_available_services(cls) -> list:
        """
        Get list of available services
        """
        return ["hilbert", "projective", "probability", "verification", "command"]

    @classmethod
    def clear_cache(cls):
        """
        Clear the service cache (useful for testing)
        """
        cls._services.clear()
