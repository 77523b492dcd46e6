import os
from os.path import dirname
from shutil import copyfile

import click

from .core.tools.config_file_parser import data_directory

CONFIG_FILE_NAME = "interlace-config.yml"


@click.command()
def init():
    """Copy the default suite configuration into the data directory."""
    package_dir = dirname(os.path.realpath(__file__))
    data_dir = data_directory()

    if not os.path.isdir(data_dir):
        os.makedirs(data_dir)

    if not os.path.isfile(os.path.join(data_dir, CONFIG_FILE_NAME)):
        copyfile(
            os.path.join(package_dir, "config", CONFIG_FILE_NAME),
            os.path.join(data_dir, CONFIG_FILE_NAME),
        )
        print("Initializing config files")


if __name__ == "__main__":
    init()
