import os
from setuptools import find_packages, setup
from biposets import __appname__, __release__, __description__

with open(os.path.join(os.path.dirname(__file__), 'README.md')) as readme:
    README = readme.read()

with open(os.path.join(os.path.dirname(__file__), "requirements", "base.txt"), 'rb') as require:
    REQUIRE = require.read().decode('utf-8').splitlines() + ['setuptools']

# allow setup.py to be run from any path
os.chdir(os.path.normpath(os.path.join(os.path.abspath(__file__), os.pardir)))

setup(
    name=__appname__,
    version=__release__,
    packages=find_packages(exclude=['examples', 'examples.*']),
    include_package_data=True,
    package_data={'biposets': ['settings/keys.json.example']},
    install_requires=REQUIRE,
    license='Apache License 2.0',
    description=__description__,
    long_description=README,
    long_description_content_type='text/markdown',
    entry_points={
        'console_scripts': ['biposet = biposets:cli'],
    },
    classifiers=[
        'Environment :: Console',
        'Framework :: Django',
        'Framework :: Django :: 4.2',
        'Framework :: Celery',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
