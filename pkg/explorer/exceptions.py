# Copyright 2024 The biposets authors.
# All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may
# not use this file except in compliance with the License. You may obtain
# a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.

__all__ = ['BiPosetError', 'UsageError', 'ResourceError', 'ParseError']


class BiPosetError(Exception):
    """Base class of every error raised by the explorer app"""


class UsageError(BiPosetError):
    """Bad arguments: index out of range, dimension mismatch, unvalidated input"""


class ResourceError(BiPosetError):
    """Requested structure exceeds a configured cap"""


class ParseError(BiPosetError):
    """Malformed .bpo / .map text"""

    def __init__(self, detail, line=None):
        self.detail = detail
        self.line = line
        message = detail if line is None else "%s, line %i" % (detail, line)
        super(ParseError, self).__init__(message)
