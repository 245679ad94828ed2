#!/usr/bin/env python3
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Succinct coding of ordered trees."""

import sys

# Local imports
import libparity


class Command(libparity.command.Command):
    """Code a tree and print every node's coded navigation path."""

    NAME = "parity codetree"
    DESCRIPTION = """
Relabel the branching directions of an ordered tree with binary strings so
that the order of siblings is kept and every navigation path uses at most
ceil(lg leaves) bits.
"""
    EPILOG = libparity.doc.TREE_DOC + libparity.doc.EXIT_DOC

    def cli(self):
        """Add command line arguments specific to the command."""
        self.parser.add_argument(
            "tree",
            metavar="<file>",
            nargs="?",
            default=None,
            help="Tree file, - for stdin",
        )
        self.parser.add_argument(
            "--sample",
            dest="sample",
            default=False,
            action="store_true",
            help="Code the built in eight leaf example tree",
        )

    def execute(self):
        """Code the tree and print the mapping."""
        if self.opts.sample:
            tree = libparity.trees.SAMPLE_TREE
        elif self.opts.tree is None:
            raise libparity.exceptions.UsageError(
                "Give a tree file or --sample"
            )
        else:
            tree = libparity.trees.parse_tree(
                libparity.utils.read_text(self.opts.tree)
            )
        coded, mapping = libparity.trees.succinct_code(tree)
        budget = libparity.counters.ceil_lg(tree.leaf_count)
        for path in tree.nodes():
            image = mapping[path]
            self.write(
                f"{libparity.trees.format_path(path)} -> "
                f"{libparity.trees.format_path(image)} "
                f"({libparity.trees.code_bits(image)} bits)\n"
            )
        widest = max(libparity.trees.code_bits(path) for path in coded.paths)
        self.write(f"leaves: {tree.leaf_count}\n")
        self.write(f"budget: {budget}\n")
        self.write(f"widest: {widest}\n")
        if not libparity.trees.verify_coding(tree, coded, mapping):
            raise libparity.exceptions.MismatchError(
                "Coding is not an order preserving isomorphism within budget"
            )


def run():
    """Entry point for console scripts"""
    sys.exit(Command().main())


if __name__ == "__main__":
    run()
