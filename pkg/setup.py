#
#  Copyright (c) 2022 IBM Corp.
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
#

import setuptools

requirements_file = 'requirements.txt'

# read requirements from file
with open(requirements_file) as fh:
    requirements = [line for line in fh.read().splitlines() if line and not line.startswith('#')]

with open("README.md", "r") as fh:
    long_description = fh.read()


setuptools.setup(
    name="genus-zero-brauer",
    version="0.0.0",
    author="IBM Research",
    description="Exact computation of Brauer groups of genus zero function fields over Q",
    long_description=long_description,
    long_description_content_type="text/markdown",
    install_requires=requirements,
    packages=setuptools.find_packages(),
    license='Apache License 2.0',
    python_requires='>=3.8',
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    entry_points={"console_scripts": ["gzb = genus_zero_brauer.start_gzb:main"]},
    package_data={"genus_zero_brauer": ["config.json", "config_for_tests.json"], "": ["LICENSE", "requirements.txt"]},
    include_package_data=True
)
