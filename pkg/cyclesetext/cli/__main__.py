from __future__ import absolute_import

from .main import run

if __name__ == '__main__':
    run()
