from .base_record import BaseRecord

__all__ = ["BaseRecord"]
