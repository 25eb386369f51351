# Copyright 2026 The infprob Authors
#
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

"""Exact non-Archimedean probability and Popper functions on finite spaces."""

from ._core import (
    CapacityExceeded,
    DivisionByZero,
    EmptyCondition,
    EventSyntaxError,
    FieldValue,
    InfiniteValue,
    InfprobError,
    InvalidModel,
    InvalidPartition,
    NapModel,
    NotAPopperFunction,
    ParseError,
    PopperTable,
    UnboundAtom,
    compare_lex,
    load,
    parse_event,
)

__all__ = [
    "CapacityExceeded",
    "DivisionByZero",
    "EmptyCondition",
    "EventSyntaxError",
    "FieldValue",
    "InfiniteValue",
    "InfprobError",
    "InvalidModel",
    "InvalidPartition",
    "NapModel",
    "NotAPopperFunction",
    "ParseError",
    "PopperTable",
    "UnboundAtom",
    "compare_lex",
    "epsilon",
    "load",
    "parse_event",
]


def epsilon():
    return FieldValue.epsilon()
