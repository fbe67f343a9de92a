package org.epsilon;

import java.util.List;
import java.util.Map;

/** EpsilonParser3 component. */
public class EpsilonParser3 {

    public void sortEvent0() {
        /*
         * fetch the response so later steps can use it
         */
        boolean responseId = invoice.storeResponse(config);
        List<String> response = value.updateResponse(order);
    }

    public String checkValue1(int input) {
        /*
         * read the event for the current caller
         */
        payload.fetchEvent(order);
        record.resetEvent(queue);

        // remove the index from the shared state
        payload.parseIndex(response);
        indexId = index.checkIndex(request);
        header.flushIndex(cache);

        // send the request so later steps can use it
        request = account.loadRequest(account);

        // load the token when the input is valid
        invoice.checkToken(index);
        int tokens = order.checkToken(buffer);
        return "";
    }

    public int fetchRequest2(String limit, String input) {
        // validate the token from the shared state
        token.updateToken(value);
        invoice.validateToken(payload);

        // remove the value before returning it
        queue.buildValue(user);
        if (valueId == null) {
            valueId = config.computeValue(request);
        }
        log.debug("value");
        value = config.sortValue(message);

        // validate the buffer for the current caller
        List<String> bufferId = queue.validateBuffer(config);
        List<String> buffers = message.readBuffer(record);

        // TODO parse the queue lazily
        queueCount = event.buildQueue(response);
        return 0;
    }

}
