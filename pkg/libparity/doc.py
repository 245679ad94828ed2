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

"""Documentation types used by libparity

The docs here are meant to be formatted with a markdown formatter.
"""

# Documentation for game files given on the cli
GAME_DOC = """
# GAME FILES

Games are read in PGSolver format.  An optional header line
**parity <maxId>;** is followed by one line per vertex:

    <id> <priority> <owner> <succ>,<succ>,... ["name"];

The owner is **0** for Even and **1** for Odd.  Identifiers need not be
dense; results always refer to them as written in the file.  Use **-** to
read the game from standard input.
"""

# Documentation for exit codes shared by every command
EXIT_DOC = """
# EXIT STATUS

* **0**  Success.
* **1**  Input or usage error.
* **2**  Two solvers disagreed or a check failed.
"""

# Documentation for lasso words on the cli
LASSO_DOC = """
# LASSOS

A lasso is given as two comma separated lists of vertex ids, the prefix
and the loop, for example **--lasso 0,1 2,3** for the word 0 1 (2 3)^w.
Use **-** for an empty prefix.  The loop must not be empty.
"""

# Documentation for tree files
TREE_DOC = """
# TREE FILES

One leaf per line written as dot separated branching directions, for
example **2.0.5**.  Inner nodes are implied by their leaves.
"""

# Documentation for the trace environment variable
TRACE_DOC = """
# ENVIRONMENT

**LIBPARITY_TRACE** set to **1**, **true**, **yes** or **on** turns on
**--trace** by default.
"""
