# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the mdskit project

"""Reusable utilities for tests."""

# import built-in modules
import os
import tempfile

# import local modules
import mdskit
from tests import baseline_reader


MANIFEST_PATH = "adapter_plugin_manifest.plugin_manifest"
SAMPLE_DATA_DIR = os.path.join(os.path.dirname(__file__), "sample_data")


def create_manifest():
    """Create a temporary manifest."""
    full_baseline = baseline_reader.json_baseline_as_string(MANIFEST_PATH)

    temp_dir = tempfile.mkdtemp(prefix='test_mdskit_manifest')
    man_path = os.path.join(temp_dir, 'manifest')
    with open(man_path, 'w') as fo:
        fo.write(full_baseline)
    man = mdskit.plugins.manifest_from_file(man_path)
    man._update_plugin_source(baseline_reader.path_to_baseline(MANIFEST_PATH))
    return man


def remove_manifest(manifest):
    """Remove the manifest source files."""
    for file_path in manifest.source_files:
        # don't accidentally blow away python
        if not file_path.endswith('.py'):
            os.remove(file_path)


def graph(n, *pairs):
    return mdskit.core.Graph(n, tuple(pairs))


def path(n):
    return mdskit.generators.gen_instance("path", n)


def cycle(n):
    return mdskit.generators.gen_instance("cycle", n)


def star(leaves):
    """K1,leaves with the center at vertex 0."""
    return mdskit.generators.gen_instance("star", leaves + 1)


def complete(n):
    return mdskit.generators.gen_instance("complete", n)


def complete_bipartite(a, b):
    """Sides ``0..a-1`` and ``a..a+b-1``."""
    return mdskit.core.Graph(
        a + b,
        tuple((u, a + v) for u in range(a) for v in range(b))
    )


def small_corpus(max_n=6, seeds=(0, 1, 2)):
    """Random and structured graphs small enough for the subset oracle."""
    result = []
    for n in range(1, max_n + 1):
        result.append(("path", n, path(n)))
        result.append(("star", n, mdskit.generators.gen_instance("star", n)))
        if n >= 3:
            result.append(("cycle", n, cycle(n)))
        for seed in seeds:
            for p in (0.3, 0.6):
                result.append((
                    "random_p{}_s{}".format(p, seed),
                    n,
                    mdskit.generators.gen_instance("random", n, p, seed),
                ))
            result.append((
                "tree_s{}".format(seed),
                n,
                mdskit.generators.gen_instance("tree", n, seed=seed),
            ))
    return result
