# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Plugin manifest system: locates the file format adapters."""

from importlib import resources
import inspect
import json
import logging
import os
from pathlib import Path

try:
    from importlib import metadata
except ImportError:
    # For python 3.7
    import importlib_metadata as metadata

from .. import exceptions


# for tracking what kinds of plugins the manifest system supports
MDSKIT_PLUGIN_TYPES = [
    'adapters',
]

MANIFEST_SCHEMA = "PluginManifest.1"
ADAPTER_SCHEMA = "Adapter.1"


def plugin_entry_points():
    """Returns the list of entry points for all available mdskit plugins."""
    try:
        entry_points = metadata.entry_points(group='mdskit.plugins')
    except TypeError:
        # For python <= 3.9
        entry_points = metadata.entry_points().get('mdskit.plugins', [])

    return entry_points


def _manifest_from_data(data, source):
    from ..adapters import adapter

    if not isinstance(data, dict):
        raise exceptions.MisconfiguredPluginError(
            "manifest from {} is not a JSON object".format(source)
        )
    schema = data.get("MDSKIT_SCHEMA")
    if schema != MANIFEST_SCHEMA:
        raise exceptions.MisconfiguredPluginError(
            "manifest from {} has schema {!r}, expected {!r}".format(
                source, schema, MANIFEST_SCHEMA
            )
        )

    result = Manifest()
    for entry in data.get("adapters", []):
        if entry.get("MDSKIT_SCHEMA") != ADAPTER_SCHEMA:
            raise exceptions.MisconfiguredPluginError(
                "adapter entry {!r} in {} is not an {}".format(
                    entry.get("name"), source, ADAPTER_SCHEMA
                )
            )
        result.adapters.append(
            adapter.Adapter(
                name=entry.get("name"),
                filepath=entry.get("filepath"),
                suffixes=entry.get("suffixes", []),
            )
        )
    return result


def manifest_from_file(filepath):
    """Read the .json file at filepath into a :py:class:`Manifest` object."""

    with open(filepath, encoding="utf-8") as fo:
        try:
            data = json.load(fo)
        except ValueError as err:
            raise exceptions.MisconfiguredPluginError(
                "could not parse manifest {}: {}".format(filepath, err)
            )

    absfilepath = os.path.abspath(filepath)
    result = _manifest_from_data(data, absfilepath)
    result.source_files.append(absfilepath)
    result._update_plugin_source(absfilepath)
    return result


def manifest_from_string(input_string):
    """Deserialize the json string into a manifest object."""

    # try and get the caller's name
    name = "unknown"
    stack = inspect.stack()
    if len(stack) > 1 and len(stack[1]) > 3:
        #                     filename     function name
        name = f"{stack[1][1]}:{stack[1][3]}"

    src_string = f"call to manifest_from_string() in {name}"
    result = _manifest_from_data(json.loads(input_string), src_string)
    result.source_files.append(src_string)
    result._update_plugin_source(src_string)

    return result


class Manifest:
    """A collection of plugins, searchable by name or by file suffix.

    This is considered an internal implementation detail.
    """

    def __init__(self):
        self.adapters = []
        self.source_files = []

    def extend(self, another_manifest):
        """Aggregate another manifest's plugins into this one.

        Plugins already present keep precedence over the new ones.
        """
        if not another_manifest:
            return

        self.adapters.extend(another_manifest.adapters)
        self.source_files.extend(another_manifest.source_files)

    def _update_plugin_source(self, path):
        """Set the source file path for the manifest."""

        for thing in self.adapters:
            thing._json_path = path

    def from_filepath(self, suffix):
        """Return the adapter object associated with a given file suffix."""

        for adapter in self.adapters:
            if suffix.lower() in adapter.suffixes:
                return adapter
        raise exceptions.NoKnownAdapterForExtensionError(suffix)

    def from_name(self, name, kind_list="adapters"):
        """Return the plugin object associated with a given plugin name."""

        for thing in getattr(self, kind_list):
            if name == thing.name:
                return thing

        raise exceptions.NotSupportedError(
            "Could not find plugin: '{}' in kind_list: '{}'."
            " options: {}".format(
                name,
                kind_list,
                [thing.name for thing in getattr(self, kind_list)]
            )
        )


_MANIFEST = None


def _builtin_manifest_path():
    try:
        return (
            resources.files("mdskit.adapters")
            / "builtin_adapters.plugin_manifest.json"
        ).as_posix()
    except AttributeError:
        # For python <= 3.8
        with resources.path(
            "mdskit.adapters",
            "builtin_adapters.plugin_manifest.json"
        ) as p:
            return p.as_posix()


def load_manifest():
    """Walk the plugin manifest discovery systems and accumulate manifests.

    The order of loading (and precedence) is:

       1. Manifests specified via the :term:`MDSKIT_PLUGIN_MANIFEST_PATH`
          variable
       2. Entrypoint based plugin manifests
       3. Builtin plugin manifest
    """

    result = Manifest()

    # $MDSKIT_PLUGIN_MANIFEST_PATH is an os.pathsep separated list of file
    # paths to manifest json files.
    _local_manifest_path = os.environ.get("MDSKIT_PLUGIN_MANIFEST_PATH", None)
    if _local_manifest_path:
        for src_json_path in _local_manifest_path.split(os.pathsep):
            json_path = os.path.abspath(src_json_path)
            if (
                not os.path.exists(json_path)
                # the manifest has already been loaded
                or json_path in result.source_files
            ):
                logging.debug(
                    "skipping manifest path from "
                    "$MDSKIT_PLUGIN_MANIFEST_PATH: %s", json_path
                )
                continue

            result.extend(manifest_from_file(json_path))

    if not os.environ.get("MDSKIT_DISABLE_ENTRYPOINTS_PLUGINS"):
        for plugin in plugin_entry_points():
            plugin_name = plugin.name
            try:
                plugin_entry_point = plugin.load()
                try:
                    plugin_manifest = plugin_entry_point.plugin_manifest()

                    # the path to the python package is the unique identifier,
                    # whatever plugin_manifest() put into source_files
                    manifest_path = os.path.abspath(
                        plugin_entry_point.__file__
                    )

                    if manifest_path in result.source_files:
                        continue

                    plugin_manifest.source_files = [manifest_path]
                    plugin_manifest._update_plugin_source(manifest_path)

                except AttributeError:
                    name = plugin_entry_point.__name__

                    try:
                        filepath = resources.files(name) / "plugin_manifest.json"
                    except AttributeError:
                        # For python <= 3.8
                        with resources.path(name, "plugin_manifest.json") as p:
                            filepath = Path(p)

                    if filepath.as_posix() in result.source_files:
                        continue

                    plugin_manifest = _manifest_from_data(
                        json.loads(filepath.read_text()),
                        filepath.as_posix(),
                    )
                    plugin_manifest._update_plugin_source(filepath.as_posix())
                    plugin_manifest.source_files.append(filepath.as_posix())

            except Exception as e:
                logging.exception(
                    f"could not load plugin: {plugin_name}.  Exception is: {e}"
                )
                continue

            result.extend(plugin_manifest)
    else:
        logging.debug(
            "MDSKIT_DISABLE_ENTRYPOINTS_PLUGINS is set. "
            "Entry points plugins have been disabled."
        )

    builtin_manifest_path = _builtin_manifest_path()
    if os.path.abspath(builtin_manifest_path) not in result.source_files:
        result.extend(manifest_from_file(builtin_manifest_path))

    return result


def ActiveManifest(force_reload=False):
    """Return the fully resolved plugin manifest."""

    global _MANIFEST
    if not _MANIFEST or force_reload:
        _MANIFEST = load_manifest()

    return _MANIFEST
