"""Regenerate src/c3kit/data/registry.json, the built-in context registry.

    python3 tools/gen_registry.py
"""
import json
from pathlib import Path

S, N = "STRING", "NUMBER"

def ctx(name, group, category, method, examples, seeds=(), regex=None, generic=False):
    d = {"name": name, "group": group, "category": category, "judge_method": method,
         "examples": list(examples), "seeds": list(seeds), "regex": regex}
    if generic:
        d["generic"] = True
    return d

EMAIL_RE = r"^[A-Za-z0-9._%+-]+@[A-Za-z0-9](?:[A-Za-z0-9-]*[A-Za-z0-9])?(?:\.[A-Za-z0-9](?:[A-Za-z0-9-]*[A-Za-z0-9])?)*\.[A-Za-z]{2,}$"
FILE_RE = r"^[A-Za-z0-9_][A-Za-z0-9_ .-]*\.[A-Za-z0-9]{1,8}$"
PATH_RE = r"^(?:[A-Za-z]:)?(?:[\\/]|~[\\/]|\.{1,2}[\\/])?(?:[A-Za-z0-9_ .-]+[\\/])+[A-Za-z0-9_ .-]*$"
PROGRAM_RE = (r"^(?i:[A-Za-z0-9_+-][A-Za-z0-9_.+-]*\.(?:exe|sh|bat|cmd|com|py|jar|app|bin|pl|rb|msi|run)"
              r"|java|javac|python[23]?|node|npm|git|gcc|clang|make|cmake|bash|zsh|docker|kubectl|mvn|gradle"
              r"|ls|grep|curl|wget|ssh|vim|emacs|notepad|firefox|chrome|excel|word|photoshop)$")
WEBSITE_RE = r"^(?i:www\.)?[A-Za-z0-9](?:[A-Za-z0-9-]*[A-Za-z0-9])?(?:\.[A-Za-z0-9](?:[A-Za-z0-9-]*[A-Za-z0-9])?)*\.[A-Za-z]{2,}/?$"
URL_RE = r"^(?i:https?|ftp|file|wss?)://[^\s/?#]+(?:[/?#]\S*)?$"
OCT = r"(?:25[0-5]|2[0-4][0-9]|1[0-9]{2}|[1-9]?[0-9])"
NETADDR_RE = (rf"^(?:{OCT}(?:\.{OCT}){{3}}(?::[0-9]{{1,5}})?"
              r"|[A-Za-z0-9](?:[A-Za-z0-9.-]*[A-Za-z0-9])?:[0-9]{1,5})$")

cyber = [
    ctx("EMAIL", S, "Cyberspace", "LLM_REGEX", ["simon@example.org", "alice@mail.com", "support@acme.io"], [
        "simon@example.org", "alice@mail.com", "bob.smith@example.com", "careers@jobs.com", "support@acme.io",
        "john.doe@gmail.com", "jane_doe@yahoo.co.uk", "info@company.org", "admin@localhost.dev", "test@example.com",
        "contact@university.edu", "sales@shop.net", "noreply@service.io", "mary+news@example.org", "li.wei@example.cn",
        "hans.mueller@example.de", "user123@mail.ru", "team@startup.co", "help@bank.com", "editor@news.org",
        "carlos@empresa.es", "yuki@example.jp"], EMAIL_RE),
    ctx("FILE", S, "Cyberspace", "LLM_REGEX", ["report.pdf", "config.yml", "photo.jpg"], [
        "report.pdf", "config.yml", "photo.jpg", "notes.txt", "data.csv", "index.html", "style.css", "main.java",
        "README.md", "archive.zip", "song.mp3", "video.mp4", "invoice_2024.xlsx", "backup.tar", "settings.json",
        "logo.png", "letter.docx", "app.log", "schema.sql", "build.gradle", "image.gif", "slides.pptx"], FILE_RE),
    ctx("PATH", S, "Cyberspace", "LLM_REGEX", ["/usr/local/bin", "C:\\Users\\simon", "src/main/java"], [
        "/usr/local/bin", "/home/simon/docs", "/var/log/app.log", "/etc/nginx/nginx.conf", "/tmp/upload/",
        "C:\\Users\\simon", "C:\\Program Files\\App", "D:\\data\\report.csv", "src/main/java", "src/test/resources",
        "./build/output", "../config/app.yml", "~/Downloads/file.txt", "/opt/music/album", "docs/guide.md",
        "/var/www/html", "/home/alice/photos/", "target/classes", "/srv/data/2024", "lib/ext/plugin.jar",
        "/usr/share/fonts", "resources/images/logo.png"], PATH_RE),
    ctx("PROGRAM", S, "Cyberspace", "LLM_REGEX", ["java", "notepad.exe", "install.sh"], [
        "java", "javac", "python3", "node", "npm", "git", "gcc", "make", "bash", "docker", "kubectl", "mvn",
        "gradle", "curl", "notepad.exe", "install.sh", "setup.exe", "run.bat", "server.jar", "deploy.py",
        "firefox", "vim"], PROGRAM_RE),
    ctx("WEBSITE", S, "Cyberspace", "LLM_REGEX", ["www.example.com", "github.com", "wikipedia.org"], [
        "www.example.com", "github.com", "wikipedia.org", "www.google.com", "stackoverflow.com", "example.org",
        "www.bbc.co.uk", "news.ycombinator.com", "www.airsonic.org", "openmrs.org", "www.amazon.com",
        "twitter.com", "www.apache.org", "docs.oracle.com", "www.mozilla.org", "maps.google.com", "www.nasa.gov",
        "mit.edu", "www.shopizer.com", "www.python.org", "medium.com", "www.reddit.com"], WEBSITE_RE),
    ctx("URL", S, "Cyberspace", "LLM_REGEX", ["https://www.example.com/index.html", "http://somesite.com/", "ftp://files.example.org"], [
        "https://www.example.com/index.html", "http://somesite.com/", "ftp://files.example.org/pub",
        "https://github.com/openmrs/openmrs-core", "http://localhost:8080/api", "https://api.example.com/v1/users",
        "https://maps.googleapis.com/maps/api/geocode/json", "http://www.airsonic.org/download",
        "https://en.wikipedia.org/wiki/London", "https://twitter.com/home", "http://example.org/search?q=java",
        "https://www.google.com", "http://127.0.0.1:9000/", "https://docs.python.org/3/", "https://shop.example.com/cart",
        "http://intranet.local/wiki", "https://cdn.example.net/img/logo.png", "wss://stream.example.com/socket",
        "https://www.bbc.co.uk/news", "http://test.example.com/login", "ftp://files.example.org/pub/readme.txt",
        "https://mail.example.org/inbox#unread"], URL_RE),
    ctx("NETADDR", S, "Cyberspace", "LLM_REGEX", ["192.168.0.1", "localhost:8080", "10.0.0.2:22"], [
        "192.168.0.1", "127.0.0.1", "10.0.0.2", "172.16.254.1", "8.8.8.8", "192.168.1.100:8080", "localhost:8080",
        "127.0.0.1:3306", "10.0.0.2:22", "example.com:443", "db.internal:5432", "0.0.0.0", "255.255.255.0",
        "192.0.2.10", "203.0.113.5:80", "mail.example.org:25", "cache:6379", "localhost:9000", "1.1.1.1",
        "198.51.100.7:8443", "10.1.2.3", "server01:8080"], NETADDR_RE),
]

geo = [
    ctx("CITY", S, "Geo-Abstract", "LLM_NER", ["London", "Beijing", "Paris"], [
        "Beijing", "London", "Paris", "New York", "Tokyo", "Berlin", "Madrid", "Rome", "Sydney", "Toronto",
        "Shanghai", "Moscow", "Cairo", "Mumbai", "Chicago", "Amsterdam", "Vienna", "Seoul", "San Francisco",
        "Los Angeles", "Dublin", "Lisbon"]),
    ctx("ORGANIZATION", S, "Geo-Abstract", "LLM_NER", ["Google", "United Nations", "Acme Corp"], [
        "Google", "Microsoft", "Apple", "IBM", "Amazon", "United Nations", "Red Cross", "Acme Corp", "Oracle",
        "Intel", "Siemens", "Toyota", "Apache Software Foundation", "World Bank", "NASA", "Harvard University",
        "Stanford University", "Mozilla", "Samsung", "Netflix", "Airbus", "Unicef"]),
    ctx("COUNTRY", S, "Geo-Abstract", "LLM_NER", ["China", "France", "Brazil"], [
        "China", "France", "Brazil", "Germany", "Japan", "India", "Canada", "Australia", "Italy", "Spain",
        "Mexico", "Egypt", "Kenya", "Sweden", "Norway", "Argentina", "United States", "United Kingdom",
        "South Korea", "New Zealand", "Portugal", "Netherlands"]),
    ctx("GPE", S, "Geo-Abstract", "LLM_NER", ["UN", "California", "EU"], [
        "UN", "EU", "California", "Texas", "Bavaria", "Ontario", "Quebec", "Scotland", "Catalonia", "Florida",
        "Hokkaido", "Guangdong", "Tuscany", "Queensland", "Alaska", "Wales", "Flanders", "Kerala", "Saxony",
        "Nevada", "Oregon", "Yorkshire"]),
    ctx("FAC", S, "Geo-Abstract", "LLM_NER", ["Route 66", "Golden Gate Bridge", "Heathrow Airport"], [
        "Route 66", "Golden Gate Bridge", "Heathrow Airport", "Eiffel Tower", "Brooklyn Bridge", "Hoover Dam",
        "Wembley Stadium", "Penn Station", "Grand Central Terminal", "Highway 101", "Tower Bridge",
        "Sydney Opera House", "Empire State Building", "Central Station", "Interstate 95", "Times Square",
        "Main Street", "Fifth Avenue", "Gatwick Airport", "Union Station", "Hyde Park", "Abbey Road"]),
    ctx("LOCATION", S, "Geo-Abstract", "LLM_NER", ["restaurant", "Europe", "downtown"], [
        "restaurant", "Europe", "Asia", "Africa", "downtown", "park", "beach", "airport", "hospital", "school",
        "office", "library", "museum", "river", "lake", "mountain", "city center", "north", "Pacific Ocean",
        "Mount Everest", "Sahara", "kitchen"], generic=True),
]

temporal = [
    ctx("DATE", S, "Temporal", "LLM_NER", ["Sat 26 April", "2024-05-01", "tomorrow"], [
        "Sat 26 April", "2024-05-01", "tomorrow", "yesterday", "today", "Monday", "1 January 2024",
        "March 3", "Christmas", "New Year", "Friday 13 October", "25 December", "July 4", "2023-12-31",
        "Sunday", "next Tuesday", "last Friday", "May 2020", "15 August 1947", "Thu 2 Feb", "October", "1999-01-01"]),
    ctx("DURATION", S, "Temporal", "LLM_NER", ["15 years", "2 hours", "three days"], [
        "15 years", "2 hours", "three days", "30 minutes", "10 seconds", "one week", "6 months", "a decade",
        "two weeks", "90 days", "45 minutes", "1 year", "half an hour", "24 hours", "five years", "a fortnight",
        "3 weeks", "12 months", "a century", "20 seconds", "an hour", "4 days"]),
    ctx("TIMESET", S, "Temporal", "LLM_NER", ["Every Monday", "daily", "twice a week"], [
        "Every Monday", "daily", "weekly", "monthly", "yearly", "hourly", "every day", "each week",
        "twice a week", "once a month", "every Friday", "every morning", "annually", "nightly", "every 2 hours",
        "every weekend", "each Sunday", "three times a day", "every year", "every evening", "weekdays",
        "every night"]),
    ctx("TIME", S, "Temporal", "LLM_NER", ["10:30", "noon", "midnight"], [
        "10:30", "noon", "midnight", "9:00", "23:59", "08:15:30", "7 pm", "6 am", "morning", "afternoon",
        "evening", "tonight", "dawn", "dusk", "14:00", "12:45 pm", "5 o'clock", "now", "midday", "night",
        "11:11", "00:00"], generic=True),
]

numstr = [
    ctx("PERCENT", S, "Number", "LLM_NER", ["20%", "50 percent", "3.5%"], [
        "20%", "50%", "100%", "3.5%", "0.5%", "75%", "10 percent", "50 percent", "twenty percent", "99.9%",
        "12%", "1%", "33%", "5 percent", "60%", "15.25%", "80 per cent", "45%", "25%", "0%", "8%", "66.7%"]),
    ctx("ORDINAL", S, "Number", "LLM_NER", ["first", "2nd", "third"], [
        "first", "second", "third", "fourth", "fifth", "sixth", "seventh", "eighth", "ninth", "tenth",
        "1st", "2nd", "3rd", "4th", "21st", "100th", "eleventh", "twelfth", "twentieth", "penultimate", "22nd", "33rd"]),
    ctx("CARDINAL", S, "Number", "LLM_NER", ["two", "one hundred", "twelve"], [
        "two", "one", "three", "four", "five", "six", "seven", "eight", "nine", "ten", "eleven", "twelve",
        "twenty", "fifty", "one hundred", "a thousand", "two million", "a dozen", "twenty five", "ninety nine",
        "thirty", "zero"]),
]

personal = [
    ctx("PERSON", S, "Personal Identifier", "LLM_NER", ["Simon", "Enrico Fermi", "Alice"], [
        "Simon", "Enrico Fermi", "Alice", "Bob", "John Smith", "Jane Doe", "Maria Garcia", "Wei Zhang",
        "Ada Lovelace", "Alan Turing", "Grace Hopper", "Peter", "Linus Torvalds", "Marie Curie", "Albert Einstein",
        "Emma Watson", "Carlos", "Yuki Tanaka", "Ahmed", "Olivia", "James Brown", "Sophie Martin"]),
    ctx("NORP", S, "Personal Identifier", "LLM_NER", ["American", "Chinese", "Buddhist"], [
        "American", "Chinese", "French", "German", "British", "Japanese", "Italian", "Spanish", "Brazilian",
        "Indian", "Canadian", "Mexican", "Russian", "Korean", "Buddhist", "Christian", "Muslim", "Hindu",
        "Jewish", "Democrat", "Republican", "European"]),
]

finance = [
    ctx("MONEY", S, "Finance", "LLM_NER", ["2 euros", "$5", "100 dollars"], [
        "2 euros", "$5", "100 dollars", "€20", "£15", "¥1000", "50 cents", "1.99 USD", "10 EUR", "3 pounds",
        "$19.99", "5 yuan", "500 yen", "$1,000", "twenty dollars", "7 francs", "1 million dollars",
        "99 cents", "€2.50", "4 rupees", "£3.20", "12 GBP"]),
]

number = [
    ctx("BINARY", N, "Base Formats", "REGEX", ["0b100", "0b1010", "0B11"], [],
        r"^-?0[bB][01]+(?:_+[01]+)*[lL]?$"),
    ctx("HEXADECIMAL", N, "Base Formats", "REGEX", ["0xfe", "0xFF00", "0x1A2B"], [],
        r"^-?0[xX][0-9a-fA-F]+(?:_+[0-9a-fA-F]+)*[lL]?$"),
    ctx("OCTAL", N, "Base Formats", "REGEX", ["007", "0644", "0755"], [],
        r"^-?0[0-7]+(?:_+[0-7]+)*[lL]?$"),
    ctx("FIXEDLENGTH", N, "Other Formats", "RULE_REGEX", ["1111_1111_1111_1111", "4000_1234_5678_9010", "0400_0000"], []),
    ctx("LONGNUMBER", N, "Other Formats", "RULE_REGEX", ["1_000_000_000", "9_223_372_036_854_775_807L", "11_321_22_745"], []),
    ctx("SCIENTIFIC", N, "Other Formats", "RULE_REGEX", ["1.2e20f", "6.022E23", "1e-9"], [],
        r"^-?(?!0[xX])(?:[0-9][0-9_]*\.?[0-9_]*|\.[0-9][0-9_]*)[eE][+-]?[0-9][0-9_]*[fFdD]?$"),
]

def shot(param, method, source, answer):
    q = (f"Parameter name: {param}\nMethod name: {method}\nSource code with comments:\n{source}\n"
         f"Which context should the values of the parameter `{param}` match?")
    return {"question": q, "answer": answer}

categories = [
    {"name": "Cyberspace", "shot": shot("mailAddress", "sendWelcome",
        "/** Sends the welcome mail to the given address. */\npublic void sendWelcome(String mailAddress) {\n    mailer.send(mailAddress, WELCOME);\n}", "EMAIL")},
    {"name": "Geo-Abstract", "shot": shot("town", "setTown",
        "// the town where the customer lives\npublic void setTown(String town) { this.town = town; }", "CITY")},
    {"name": "Temporal", "shot": shot("birthday", "parseBirthday",
        "/** Parses a birthday such as \"Sat 26 April\". */\npublic LocalDate parseBirthday(String birthday) {\n    return LocalDate.parse(birthday, FORMAT);\n}", "DATE")},
    {"name": "Number", "shot": shot("rate", "setDiscount",
        "/** @param rate the discount, e.g. \"20%\" */\npublic void setDiscount(String rate) { this.rate = rate; }", "PERCENT")},
    {"name": "Personal Identifier", "shot": shot("firstName", "Author",
        "public Author(String firstName) { this.firstName = firstName; }", "PERSON")},
    {"name": "Finance", "shot": shot("price", "setPrice",
        "/** Display price including the currency, e.g. \"2 euros\". */\npublic void setPrice(String price) { this.price = price; }", "MONEY")},
    {"name": "Base Formats", "shot": shot("mask", "applyMask",
        "int applyMask(int flags, int mask) { return flags & mask; }\nThe operators involved by this parameter are [&]", "BINARY")},
    {"name": "Other Formats", "shot": shot("cardNumber", "setCardNumber",
        "/** 16-digit credit card number. */\npublic void setCardNumber(long cardNumber) { this.cardNumber = cardNumber; }", "FIXEDLENGTH")},
]

WEEKDAYS = ["monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday",
            "mon", "tue", "tues", "wed", "thu", "thur", "thurs", "fri", "sat", "sun"]
MONTHS = ["january", "february", "march", "april", "may", "june", "july", "august", "september",
          "october", "november", "december", "jan", "feb", "mar", "apr", "jun", "jul", "aug", "sep",
          "sept", "oct", "nov", "dec"]
NUMWORDS = ["zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten", "eleven",
            "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen", "nineteen", "twenty",
            "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety", "hundred", "thousand", "million",
            "billion", "trillion", "dozen", "a", "an"]

gaz = {}
gaz["PERSON"] = sorted(set("""simon enrico fermi alice bob john smith jane doe maria garcia wei zhang ada lovelace alan
turing grace hopper peter linus torvalds marie curie albert einstein emma watson carlos yuki tanaka ahmed olivia
james brown sophie martin michael david sarah laura robert william mary patricia jennifer linda elizabeth
thomas charles daniel matthew anthony mark paul steven andrew kenneth joshua kevin brian george edward
johnson williams jones miller davis rodriguez martinez hernandez lopez gonzalez wilson anderson taylor moore
jackson lee thompson white harris clark lewis robinson walker young allen king wright scott hill green adams
baker nelson carter mitchell perez roberts turner phillips campbell parker evans edwards collins stewart
hans mueller schmidt li wang chen liu yang huang mohammed fatima ali priya raj kumar sato suzuki takahashi
ivan petrov olga anna elena luca rossi giulia pierre dubois jean claire lucas noah liam ethan mia isabella
ava charlotte amelia harper evelyn abigail emily madison chloe zoe nora hannah lily ella grace""".split())
    | {"john doe", "jane doe", "test user", "john smith", "max mustermann", "erika mustermann"})
gaz["NORP"] = sorted(set("""american chinese french german british english scottish irish welsh japanese italian spanish
brazilian indian canadian mexican russian korean buddhist christian muslim hindu jewish democrat democratic
republican european asian african australian dutch swedish norwegian danish finnish polish greek turkish
egyptian nigerian kenyan argentine argentinian chilean peruvian colombian portuguese swiss austrian belgian
catholic protestant orthodox sikh atheist socialist conservative liberal latino hispanic arab persian thai
vietnamese filipino indonesian""".split()))
gaz["COUNTRY"] = sorted({"china", "france", "brazil", "germany", "japan", "india", "canada", "australia",
    "italy", "spain", "mexico", "egypt", "kenya", "sweden", "norway", "argentina", "united states",
    "united kingdom", "south korea", "new zealand", "portugal", "netherlands", "usa", "uk", "russia",
    "belgium", "switzerland", "austria", "poland", "greece", "turkey", "ireland", "denmark", "finland",
    "iceland", "chile", "peru", "colombia", "venezuela", "cuba", "nigeria", "ghana", "ethiopia", "morocco",
    "south africa", "israel", "iran", "iraq", "saudi arabia", "pakistan", "bangladesh", "vietnam", "thailand",
    "indonesia", "philippines", "malaysia", "singapore", "north korea", "mongolia", "ukraine", "czech republic",
    "hungary", "romania", "bulgaria"})
gaz["CITY"] = sorted({"beijing", "london", "paris", "new york", "tokyo", "berlin", "madrid", "rome", "sydney",
    "toronto", "shanghai", "moscow", "cairo", "mumbai", "chicago", "amsterdam", "vienna", "seoul",
    "san francisco", "los angeles", "dublin", "lisbon", "boston", "seattle", "miami", "houston", "dallas",
    "vancouver", "montreal", "melbourne", "munich", "hamburg", "milan", "naples", "barcelona", "valencia",
    "prague", "budapest", "warsaw", "stockholm", "oslo", "copenhagen", "helsinki", "athens", "istanbul",
    "dubai", "delhi", "new delhi", "bangalore", "singapore", "hong kong", "osaka", "kyoto", "nanjing",
    "shenzhen", "guangzhou", "rio de janeiro", "sao paulo", "buenos aires", "lima", "bogota", "mexico city",
    "nairobi", "lagos", "cape town", "zurich", "geneva", "brussels", "edinburgh", "manchester", "liverpool"})
gaz["GPE"] = sorted({"un", "eu", "nato", "california", "texas", "bavaria", "ontario", "quebec", "scotland",
    "catalonia", "florida", "hokkaido", "guangdong", "tuscany", "queensland", "alaska", "wales", "flanders",
    "kerala", "saxony", "nevada", "oregon", "yorkshire", "new york state", "washington", "virginia", "ohio",
    "michigan", "georgia", "arizona", "utah", "colorado", "hawaii", "massachusetts", "england",
    "northern ireland", "british columbia", "alberta", "victoria", "new south wales", "tasmania",
    "sichuan", "yunnan", "tibet", "punjab", "bengal", "andalusia", "brittany", "normandy", "provence",
    "lombardy", "sicily", "sardinia", "crimea", "siberia", "asean", "opec"})
gaz["FAC"] = sorted({"route 66", "golden gate bridge", "heathrow airport", "eiffel tower", "brooklyn bridge",
    "hoover dam", "wembley stadium", "penn station", "grand central terminal", "highway 101", "tower bridge",
    "sydney opera house", "empire state building", "central station", "interstate 95", "times square",
    "main street", "fifth avenue", "gatwick airport", "union station", "hyde park", "abbey road",
    "route", "highway", "interstate", "bridge", "tunnel", "airport", "station", "terminal", "stadium", "arena",
    "tower", "building", "dam", "street", "avenue", "road", "boulevard", "lane", "square", "plaza", "harbor",
    "port", "pier", "opera", "house", "hall", "museum", "gallery", "palace", "castle", "cathedral", "church",
    "temple", "golden", "gate", "grand", "central", "union", "penn", "heathrow", "gatwick", "wembley", "hoover",
    "eiffel", "brooklyn", "empire", "state", "sydney", "times", "main", "fifth", "hyde", "park", "abbey",
    "<NUM>"})
gaz["LOCATION"] = sorted({"restaurant", "europe", "asia", "africa", "north america", "south america",
    "antarctica", "oceania", "downtown", "park", "beach", "airport", "hospital", "school", "office", "library",
    "museum", "river", "lake", "mountain", "city center", "north", "south", "east", "west", "pacific ocean",
    "atlantic ocean", "indian ocean", "mount everest", "sahara", "kitchen", "garden", "home", "hotel",
    "cafe", "bar", "shop", "store", "market", "mall", "bank", "church", "station", "harbor", "island",
    "forest", "desert", "valley", "village", "town", "suburb", "campus", "warehouse", "factory", "farm",
    "the alps", "the andes", "amazon", "nile", "mississippi", "mediterranean", "middle east", "city",
    "center", "centre", "ocean", "pacific", "atlantic", "mount", "everest", "the", "of"})
gaz["ORGANIZATION"] = sorted({"google", "microsoft", "apple", "ibm", "amazon", "united nations", "red cross",
    "acme", "acme corp", "oracle", "intel", "siemens", "toyota", "apache software foundation",
    "world bank", "nasa", "harvard university", "stanford university", "mozilla", "samsung", "netflix",
    "airbus", "unicef", "unesco", "who", "fifa", "bbc", "cnn", "reuters", "facebook", "meta", "twitter",
    "tesla", "boeing", "sony", "nokia", "ericsson", "volkswagen", "bmw", "nestle", "unilever", "pfizer",
    "mit", "oxford university", "cambridge university", "eclipse foundation", "linux foundation",
    "github", "gitlab", "spotify", "uber", "airbnb", "inc", "corp", "corporation", "ltd", "llc", "gmbh",
    "company", "foundation", "university", "institute", "bank", "group", "agency", "association", "society",
    "united", "nations", "red", "cross", "software", "world", "harvard", "stanford", "oxford", "cambridge",
    "apache", "eclipse", "linux", "&", "and"})
gaz["DATE"] = sorted(set(WEEKDAYS + MONTHS + ["today", "tomorrow", "yesterday", "christmas", "easter",
    "new year", "new year's eve", "halloween", "thanksgiving", "next", "last", "this", "day", "of", "the",
    "<NUM>", "<ORD>", "<ISODATE>", "<SLASHDATE>", "weekend", "midsummer"]))
gaz["DURATION"] = sorted(set(NUMWORDS + ["second", "seconds", "minute", "minutes", "hour", "hours", "day", "days",
    "week", "weeks", "month", "months", "year", "years", "decade", "decades", "century", "centuries",
    "fortnight", "millisecond", "milliseconds", "half", "quarter", "an hour", "<NUM>", "long", "several", "few"]))
gaz["TIMESET"] = sorted(set(WEEKDAYS + ["every", "each", "daily", "weekly", "monthly", "yearly", "annually",
    "hourly", "nightly", "weekdays", "weekends", "weekend", "morning", "evening", "night", "afternoon", "day",
    "week", "month", "year", "hour", "hours", "minutes", "times", "twice", "once", "thrice", "per", "a", "an",
    "other", "<NUM>", "two", "three", "four", "five", "biweekly", "quarterly", "fortnightly"]))
gaz["TIME"] = sorted({"noon", "midnight", "midday", "morning", "afternoon", "evening", "night", "tonight",
    "dawn", "dusk", "sunrise", "sunset", "now", "am", "pm", "a.m.", "p.m.", "o'clock", "<CLOCK>", "<NUM>",
    "early", "late", "lunchtime", "teatime", "bedtime", "breakfast", "dinner", "hour", "half", "past", "quarter",
    "to", "this", "at", "utc", "gmt", "cet", "est", "pst", "oclock", "overnight", "daybreak", "nightfall",
    "twilight", "morning's", "eve", "sundown", "daylight", "witching", "rush", "happy", "the", "in"})
gaz["PERCENT"] = sorted({"%", "percent", "per cent", "percentage", "pct", "<NUM>", "per", "cent",
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten", "eleven", "twelve",
    "fifteen", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety", "hundred",
    "half", "a", "point", "basis", "points", "bps", "percentile", "percent off", "fraction", "quarter",
    "three quarters", "per mille", "‰", "ppm", "twenty five", "seventy five", "one hundred", "ninety nine",
    "thirty three", "sixty six"})
gaz["ORDINAL"] = sorted({"first", "second", "third", "fourth", "fifth", "sixth", "seventh", "eighth", "ninth",
    "tenth", "eleventh", "twelfth", "thirteenth", "fourteenth", "fifteenth", "sixteenth", "seventeenth",
    "eighteenth", "nineteenth", "twentieth", "thirtieth", "fortieth", "fiftieth", "sixtieth", "seventieth",
    "eightieth", "ninetieth", "hundredth", "thousandth", "millionth", "last", "penultimate", "final",
    "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety", "<ORD>", "primary",
    "secondary", "tertiary", "quaternary", "next", "previous", "initial", "latter", "former"})
gaz["CARDINAL"] = sorted(set(NUMWORDS + ["hundreds", "thousands", "millions", "billions", "dozens", "score",
    "couple", "pair", "single", "double", "triple", "none", "nil", "nought", "and", "minus", "point",
    "half", "<NUM>"]))
gaz["MONEY"] = sorted({"euro", "euros", "eur", "€", "dollar", "dollars", "usd", "$", "pound", "pounds", "gbp",
    "£", "yen", "jpy", "¥", "yuan", "cny", "rmb", "cent", "cents", "penny", "pence", "franc", "francs", "chf",
    "rupee", "rupees", "inr", "peso", "pesos", "ruble", "rubles", "won", "krona", "kronor", "krone", "real",
    "reais", "lira", "bitcoin", "btc", "<NUM>", "million", "billion", "thousand", "k", "bucks", "quid",
    "twenty", "ten", "five", "one", "two", "hundred", "fifty", "aud", "cad", "us"})

for k, v in gaz.items():
    lit = [t for t in v if not t.startswith("<")]
    assert len(lit) >= 50, (k, len(lit))

doc = {
    "notes": {
        "EMAIL": "local-part@domain where the domain has at least one dot and a 2+ letter TLD",
        "FILE": "bare file name with an extension of 1-8 alphanumerics; no directory separators",
        "PATH": "optional drive or ~/./.. prefix followed by one or more separator-terminated segments",
        "PROGRAM": "file name with an executable extension, or a well-known command name (case-insensitive)",
        "WEBSITE": "host name without scheme, optional www. prefix and trailing slash",
        "URL": "scheme (http, https, ftp, file, ws, wss) followed by :// and a non-empty authority",
        "NETADDR": "IPv4 dotted quad with optional :port, or host:port",
        "BINARY": "0b/0B prefix, binary digits, optional underscores and long suffix",
        "HEXADECIMAL": "0x/0X prefix, hex digits, optional underscores and long suffix",
        "OCTAL": "leading zero followed by octal digits",
        "SCIENTIFIC": "decimal mantissa with an e/E exponent; hex literals are excluded",
        "LONGNUMBER": "procedural: every run of consecutive digits is at most three long",
        "FIXEDLENGTH": "procedural: at least one underscore and equal-width digit groups after the first",
        "gazetteers": "terms are matched case-insensitively; <NUM>, <ORD>, <CLOCK>, <ISODATE> and <SLASHDATE> are token classes",
    },
    "settings": {"fixed_length_width": 4},
    "contexts": cyber + geo + temporal + numstr + personal + finance + number,
    "categories": categories,
    "gazetteers": gaz,
}
with open(Path(__file__).resolve().parents[1] / "src/c3kit/data/registry.json", "w", encoding="utf-8") as f:
    json.dump(doc, f, ensure_ascii=False, indent=1)
    f.write("\n")
print(len(doc["contexts"]), {k: len(v) for k, v in gaz.items()})
