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


"""YAML reports for oracle findings."""

import yaml
from slugify import slugify

from explorer.exceptions import ParseError
from explorer.managers.oracle import Finding

__all__ = ['dump_finding', 'load_finding', 'report_filename']


class ReportDumper(yaml.SafeDumper):
    pass


def _represent_str(dumper, data):
    # embedded .bpo and .map texts stay readable as literal blocks
    style = '|' if '\n' in data else None
    return dumper.represent_scalar('tag:yaml.org,2002:str', data, style=style)


ReportDumper.add_representer(str, _represent_str)


def dump_finding(finding):
    return yaml.dump(finding.as_dict(), Dumper=ReportDumper, sort_keys=False,
                     default_flow_style=False)


def load_finding(text):
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ParseError("report is not valid YAML: %s" % e)
    if not isinstance(data, dict):
        raise ParseError("report must be a mapping")
    try:
        return Finding.from_dict(data)
    except TypeError as e:
        raise ParseError("report fields do not describe a finding: %s" % e)


def report_filename(finding):
    return "%s-n%s.yml" % (slugify(finding.claim), finding.scale.get('n_max'))
