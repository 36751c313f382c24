# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Plugin system for mdskit"""

# flake8: noqa

from .python_plugin import (
    plugin_info_map,
    PythonPlugin,
)

from .manifest import (
    manifest_from_file,
    manifest_from_string,
    ActiveManifest,
    Manifest,
)
