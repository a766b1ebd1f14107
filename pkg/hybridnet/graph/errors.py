#!/usr/bin/env python


class HybridnetError(ValueError):
    pass


class GrowthError(HybridnetError):
    pass


class ConfigError(HybridnetError):
    pass


class ResourceBoundError(HybridnetError):
    pass


class DegenerateInputError(HybridnetError):
    pass


class DisconnectedGraphError(HybridnetError):
    pass


class FileFormatError(HybridnetError):
    def __init__(self, message, line_number=None):
        self.line_number = line_number
        super().__init__(
            message if line_number is None
            else f'line {line_number}: {message}'
        )
