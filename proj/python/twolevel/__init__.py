# Copyright 2026 The twolevel Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Multi-tape two-level morphology: generation and recognition."""

import json
import os

from . import _twolevel
from ._twolevel import ConfigError, ProsodyError

__all__ = ["Engine", "ConfigError", "ProsodyError"]


def _bundled(name, fallback):
    if os.environ.get("TWOLEVEL_DATA_DIR"):
        return fallback()
    here = os.path.join(os.path.dirname(__file__), "data", name)
    return here if os.path.exists(here) else fallback()


class Engine:
    """A loaded grammar and lexicon. Results are plain dicts and lists."""

    def __init__(self, grammar=None, lexicon=None):
        grammar = grammar or _bundled("arabic.mtg", _twolevel.default_grammar_path)
        lexicon = lexicon or _bundled("arabic.mtl", _twolevel.default_lexicon_path)
        self._g = _twolevel.load(str(grammar), str(lexicon))

    @property
    def rules(self):
        return self._g.rule_ids

    def validate(self):
        return json.loads(_twolevel.validate(self._g))

    def generate(self, measure=None, features=None, **morphemes):
        """Surface forms; morphemes are given by tape, e.g. root="ktb"."""
        if measure is not None:
            measure = str(measure)
        return json.loads(
            _twolevel.generate(self._g, measure, features, morphemes))

    def analyze(self, surface):
        return json.loads(_twolevel.analyze(self._g, surface))

    def oracle(self, measure):
        return json.loads(_twolevel.oracle(self._g, int(measure)))
