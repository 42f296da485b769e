from setuptools import setup, find_packages

setup(
    name="qmonogamy",
    version="0.1",
    package_dir={"": "src"},
    packages=find_packages(where="src"),
    py_modules=["main"],
    install_requires=[
        'numpy',
        'scipy',
        'pandas',
        'loguru',
        'PyYAML',
        'python-dotenv',
        'pytest',
        'pytest-mock',
        'hypothesis',
    ],
    entry_points={
        "console_scripts": ["qmonogamy=main:main"],
    },
)
