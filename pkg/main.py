if __name__ == "__main__":

    import sys

    from bellkit import app

    sys.exit(app.run(sys.argv[1:]))
