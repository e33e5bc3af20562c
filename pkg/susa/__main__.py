from susa.cli import main

raise SystemExit(main())
