# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Exception classes for mdskit"""

__all__ = [
    'MDSKitError',
    'InputError',
    'ParseError',
    'CouldNotReadFileError',
    'ContractViolationError',
    'PreconditionError',
    'OracleLimitError',
    'DecompositionError',
    'NoKnownAdapterForExtensionError',
    'NotSupportedError',
    'AdapterDoesntSupportFunctionError',
    'MisconfiguredPluginError',
    'InvalidEnvironmentVariableError',
]


class MDSKitError(Exception):
    pass


class InputError(MDSKitError):
    pass


class ParseError(InputError):
    """Malformed text input. ``line`` is 1-indexed, ``token`` is the culprit."""

    def __init__(self, message, line=None, token=None):
        self.line = line
        self.token = token
        if line is not None:
            message = "line {}: {}".format(line, message)
        if token is not None:
            message = "{} (token: {!r})".format(message, token)
        super().__init__(message)


class CouldNotReadFileError(InputError):
    pass


class ContractViolationError(MDSKitError):
    pass


class PreconditionError(ContractViolationError):
    pass


class OracleLimitError(MDSKitError):
    pass


class DecompositionError(MDSKitError):
    pass


class NoKnownAdapterForExtensionError(MDSKitError):
    pass


class NotSupportedError(MDSKitError):
    pass


class AdapterDoesntSupportFunctionError(MDSKitError):
    pass


class MisconfiguredPluginError(MDSKitError):
    pass


class InvalidEnvironmentVariableError(MDSKitError):
    pass
