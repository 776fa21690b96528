# vim: tabstop=4 shiftwidth=4 softtabstop=4

#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

import os

from setuptools import setup

scripts = ["bin/%s" % x for x in os.listdir('bin')]

setup(name='qcollatz',
      version='0.1',
      description='Workbench for the qn+1 generalized Collatz maps',
      packages=['qcollatz', 'qcollatz.output', 'qcollatz.parser'],
      package_data={'qcollatz': ['default.conf', 'data/*.json']},
      scripts=scripts,
      install_requires=["python-gflags", "numpy", "scipy", "sympy",
                        "mpmath", "celery"],
      extras_require={'test': ["pytest"], 'docs': ["sphinx"]})
